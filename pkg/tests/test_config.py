"""Test plan loading and environment overrides"""
import pytest

from fedder_dp1.census import CensusSpec
from fedder_dp1.config import Config, PlanBook, get_config, reload_config
from fedder_dp1.errors import InputFormatError


def test_default_plans():
    config = get_config()
    names = {plan.name for plan in config.plan_book.plans}
    assert {"char2-exhaustive", "char3-exhaustive", "char5-slice", "char25-sample"} <= names
    assert config.census.chunk_size == 4096
    assert config.classifier.search_bound == 6
    assert config.plan_book.get_plan("char25-sample").order == 25


def test_unknown_plan():
    with pytest.raises(InputFormatError, match="char2-exhaustive"):
        get_config().plan_book.get_plan("char7")


def test_plan_book_from_dict():
    book = PlanBook.from_dict(
        {
            "defaults": {"workers": 3},
            "plans": {"tiny": {"p": 2, "pins": {"a4": 0, "a6": 0}}},
        }
    )
    assert book.defaults.workers == 3
    assert book.classifier.fiber_spot_checks == 4
    tiny = book.get_plan("tiny")
    assert tiny.order == 2
    assert tiny.mode == "exhaustive"
    assert tiny.pins == {"a4": 0, "a6": 0}


def test_seed_and_worker_resolution(monkeypatch):
    config = get_config()
    assert config.resolve_seed(None) is None
    assert config.resolve_seed(9) == 9
    assert config.resolve_workers(None) == 1

    monkeypatch.setenv("FEDDER_SEED", "42")
    monkeypatch.setenv("FEDDER_WORKERS", "4")
    config = reload_config()
    assert config.resolve_seed(9) == 42
    assert config.resolve_workers(None) == 4
    assert config.resolve_workers(2) == 2
    assert get_config() is config


def test_bad_seed(monkeypatch):
    monkeypatch.setenv("FEDDER_SEED", "forty-two")
    with pytest.raises(InputFormatError):
        reload_config()


def test_plans_from_environment(monkeypatch, tmp_path):
    path = tmp_path / "plans.yaml"
    path.write_text(
        "defaults:\n"
        "  chunk_size: 128\n"
        "plans:\n"
        "  quick:\n"
        "    p: 3\n"
        "    mode: sample\n"
        "    samples: 10\n"
    )
    monkeypatch.setenv("FEDDER_PLANS", str(path))
    monkeypatch.setenv("FEDDER_LOG_JSON", "true")
    config = reload_config()
    assert config.plans_path == path
    assert config.census.chunk_size == 128
    assert config.plan_book.get_plan("quick").samples == 10
    assert config.log_json


def test_explicit_plans_path(tmp_path):
    path = tmp_path / "empty.yaml"
    path.write_text("")
    config = Config(plans_path=path)
    assert config.plan_book.plans == []
    assert config.census.workers == 1


def test_plan_seed_used_without_override(monkeypatch, tmp_path):
    path = tmp_path / "plans.yaml"
    path.write_text(
        "defaults:\n"
        "  rng_seed: 5\n"
        "plans:\n"
        "  seeded:\n"
        "    p: 5\n"
        "    mode: sample\n"
        "    samples: 4\n"
        "    seed: 77\n"
        "  unseeded:\n"
        "    p: 5\n"
    )
    monkeypatch.setenv("FEDDER_PLANS", str(path))
    config = reload_config()
    book = config.plan_book
    seed = config.resolve_seed(None)
    assert CensusSpec.from_plan(book.get_plan("seeded"), config.census, seed=seed).seed == 77
    assert CensusSpec.from_plan(book.get_plan("unseeded"), config.census, seed=seed).seed == 5
    assert CensusSpec.from_plan(book.get_plan("seeded"), config.census, seed=3).seed == 3

    monkeypatch.setenv("FEDDER_SEED", "11")
    config = reload_config()
    spec = CensusSpec.from_plan(book.get_plan("seeded"), config.census, seed=config.resolve_seed(3))
    assert spec.seed == 11


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("defaults:\n  wrokers: 2\n", "wrokers"),
        ("classifier:\n  search_bound: 2\n  depth: 1\n", "depth"),
        ("plans:\n  bad:\n    p: 5\n    colour: red\n", "plans.bad"),
        ("plans:\n  bad: 5\n", "plans.bad"),
        ("plans:\n  - p: 5\n", "plans"),
        ("plans:\n  nameless:\n    q: 5\n", "plans.nameless"),
    ],
)
def test_malformed_plan_sections(tmp_path, text, fragment):
    path = tmp_path / "plans.yaml"
    path.write_text(text)
    with pytest.raises(InputFormatError, match=fragment) as info:
        Config(plans_path=path)
    assert str(path) in str(info.value)


def test_plan_file_not_yaml(tmp_path):
    path = tmp_path / "plans.yaml"
    path.write_text("plans: [unclosed\n")
    with pytest.raises(InputFormatError, match="not valid YAML"):
        Config(plans_path=path)


def test_plan_file_missing(monkeypatch, tmp_path):
    monkeypatch.setenv("FEDDER_PLANS", str(tmp_path / "absent.yaml"))
    with pytest.raises(InputFormatError, match="absent.yaml"):
        reload_config()
