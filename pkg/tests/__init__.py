"""Tests for fedder-dp1"""
