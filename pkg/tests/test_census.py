"""Test the census engine: instance indexing, analytic counts and small exhaustive runs"""
import pytest

from fedder_dp1.census import (
    CensusEngine,
    CensusSpec,
    analytic_non_split_count,
    decode_instance,
    pin_form,
    spec_for,
)
from fedder_dp1.config import get_config
from fedder_dp1.dp1 import DP1Equation
from fedder_dp1.errors import (
    InfeasibleCensusError,
    InputFormatError,
    UnsupportedCharacteristicError,
)
from fedder_dp1.fields import make_field

ENGINE = CensusEngine()


def test_analytic_counts():
    char2 = spec_for(2)
    assert char2.instances == 2**21
    assert analytic_non_split_count(char2) == 2**19

    char3 = spec_for(3)
    assert char3.instances == 3**15
    assert analytic_non_split_count(char3) == 3**11

    slice5 = spec_for(5, pins={"a4": 0})
    assert slice5.instances == 5**7
    assert analytic_non_split_count(slice5) == 625


def test_analytic_count_with_failing_pin():
    spec = spec_for(3, pins={"a2": [1, 0, 0]})
    assert analytic_non_split_count(spec) == 0
    assert analytic_non_split_count(spec_for(5, mode="sample", samples=10)) is None


def test_decode_instance_indexing(f3):
    spec = spec_for(3, pins={"a2": 0, "a6": 0})
    assert decode_instance(spec, 0) == DP1Equation.of(f3)
    eq = decode_instance(spec, 1)
    assert eq.a4.coeffs[0] == f3.element(1)
    eq = decode_instance(spec, 3)
    assert eq.a4.coeffs[0].is_zero()
    assert eq.a4.coeffs[1] == f3.element(1)


def test_char2_pinned_exhaustive():
    spec = spec_for(2, pins={"a4": 0, "a6": 0}, chunk_size=64)
    summary = ENGINE.run(spec)
    assert summary.instances == 512
    assert summary.non_split == 128
    assert summary.expected_non_split == 128
    assert summary.predicate_true == 128
    assert not summary.mismatches
    assert summary.ok


def test_worker_count_does_not_change_result():
    inline = ENGINE.run(spec_for(2, pins={"a4": 0, "a6": 0}, chunk_size=64))
    pooled = ENGINE.run(spec_for(2, pins={"a4": 0, "a6": 0}, chunk_size=64, workers=2))
    assert pooled.instances == inline.instances
    assert pooled.non_split == inline.non_split
    assert pooled.mismatches == inline.mismatches


def test_char3_pinned_exhaustive():
    summary = ENGINE.run(spec_for(3, pins={"a2": 0, "a6": 0}, chunk_size=100))
    assert summary.instances == 243
    assert summary.non_split == 81
    assert summary.ok


@pytest.mark.slow
def test_char3_a6_pinned_exhaustive():
    summary = ENGINE.run(spec_for(3, pins={"a6": 0}))
    assert summary.instances == 6561
    assert summary.non_split == 81
    assert summary.ok


def test_char5_sample_is_deterministic():
    first = ENGINE.run(spec_for(5, mode="sample", samples=200, seed=7, chunk_size=50))
    second = ENGINE.run(spec_for(5, mode="sample", samples=200, seed=7, chunk_size=50))
    assert first.instances == 200
    assert not first.mismatches
    assert first.non_split == second.non_split
    assert first.predicate_true == first.non_split
    assert first.expected_non_split is None
    assert first.ok


def test_char25_sample_agrees():
    summary = ENGINE.run(spec_for(5, 25, mode="sample", samples=120, seed=25, chunk_size=40))
    assert summary.spec.field.order == 25
    assert summary.instances == 120
    assert not summary.mismatches
    assert summary.predicate_true == summary.non_split
    assert summary.ok


def test_full_space_sample_completes_before_predicate():
    summary = ENGINE.run(spec_for(3, space="full", mode="sample", samples=60, seed=3))
    assert summary.instances == 60
    assert not summary.mismatches


@pytest.mark.slow
def test_char5_slice_exhaustive():
    summary = ENGINE.run(spec_for(5, pins={"a4": 0}))
    assert summary.instances == 78125
    assert summary.non_split == 625
    assert summary.ok


def test_infeasible_exhaustive_census():
    with pytest.raises(InfeasibleCensusError):
        ENGINE.run(spec_for(2, max_exhaustive=100))


def test_spec_validation(f5):
    with pytest.raises(UnsupportedCharacteristicError):
        CensusSpec(p=7, q=7)
    with pytest.raises(InputFormatError):
        spec_for(5, space="bogus")
    with pytest.raises(InputFormatError):
        spec_for(5, mode="sample")
    with pytest.raises(InputFormatError):
        spec_for(5, workers=0)
    with pytest.raises(InputFormatError):
        spec_for(5, pins={"a1": 0})
    with pytest.raises(InputFormatError):
        CensusSpec(p=3, q=9, pins={"a4": pin_form(f5, "a4", 0)})
    with pytest.raises(InputFormatError):
        CensusSpec(p=3, q=25)


def test_pin_form(f3):
    assert pin_form(f3, "a2", 0).is_zero()
    assert str(pin_form(f3, "a2", [1, 0, 2])) == "s^2 - t^2"
    with pytest.raises(InputFormatError):
        pin_form(f3, "a2", [1, 0])
    with pytest.raises(InputFormatError):
        pin_form(f3, "a5", 0)


def test_spec_from_plan():
    config = get_config()
    plan = config.plan_book.get_plan("char5-slice")
    spec = CensusSpec.from_plan(plan, config.census, seed=11)
    assert spec.q == 5
    assert spec.seed == 11
    assert spec.pins["a4"].is_zero()
    assert spec.instances == 78125
    assert analytic_non_split_count(spec) == 625
    assert make_field(5) == spec.field
