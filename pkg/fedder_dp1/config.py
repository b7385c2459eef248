"""Configuration management for fedder-dp1"""
import os
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import structlog
import yaml

from .errors import InputFormatError

logger = structlog.get_logger()

PinValue = Union[int, List[Union[int, str]]]


@dataclass
class CensusDefaults:
    """Engine defaults shared by every census plan"""
    workers: int = 1
    chunk_size: int = 4096
    max_exhaustive_instances: int = 250_000_000
    rng_seed: int = 0
    progress_every: int = 16


@dataclass
class ClassifierConfig:
    """Knobs of the single-equation classifier"""
    search_bound: int = 6
    fiber_spot_checks: int = 4


@dataclass
class CensusPlanConfig:
    """A named census run"""
    name: str
    p: int
    q: Optional[int] = None
    space: str = "normalized"
    mode: str = "exhaustive"
    samples: int = 0
    seed: Optional[int] = None
    pins: Dict[str, PinValue] = field(default_factory=dict)
    description: str = ""

    @property
    def order(self) -> int:
        return self.q or self.p


def _section(key: str, body: Any) -> Dict[str, Any]:
    if body is None:
        return {}
    if not isinstance(body, dict):
        raise InputFormatError(f"section {key!r} must be a mapping, got {type(body).__name__}")
    return body


def _build(kind, key: str, body: Any, **extra):
    """Instantiate a config dataclass, naming the offending section on bad keys"""
    body = _section(key, body)
    known = {f.name for f in fields(kind)}
    unknown = sorted(set(body) - known)
    if unknown:
        raise InputFormatError(f"section {key!r}: unknown keys {', '.join(unknown)}")
    try:
        return kind(**body, **extra)
    except TypeError as e:
        raise InputFormatError(f"section {key!r}: {e}")


@dataclass
class PlanBook:
    """Complete plan file: defaults plus named plans"""
    defaults: CensusDefaults
    classifier: ClassifierConfig
    plans: List[CensusPlanConfig]

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "PlanBook":
        """Load plans from dictionary"""
        data = data or {}
        if not isinstance(data, dict):
            raise InputFormatError("plan file must be a mapping of sections")
        return cls(
            defaults=_build(CensusDefaults, "defaults", data.get("defaults")),
            classifier=_build(ClassifierConfig, "classifier", data.get("classifier")),
            plans=[
                _build(CensusPlanConfig, f"plans.{name}", body, name=name)
                for name, body in _section("plans", data.get("plans")).items()
            ],
        )

    @classmethod
    def from_yaml(cls, path: Path) -> "PlanBook":
        """Load plans from YAML file"""
        logger.debug("loading_plans", path=str(path))
        try:
            with open(path, "r") as f:
                data = yaml.safe_load(f)
        except OSError as e:
            raise InputFormatError(f"cannot read plan file {str(path)!r}: {e.strerror or e}")
        except yaml.YAMLError as e:
            raise InputFormatError(f"plan file {str(path)!r} is not valid YAML: {e}")
        try:
            return cls.from_dict(data)
        except InputFormatError as e:
            raise InputFormatError(f"plan file {str(path)!r}: {e}")

    def get_plan(self, name: str) -> CensusPlanConfig:
        for plan in self.plans:
            if plan.name == name:
                return plan
        known = ", ".join(p.name for p in self.plans)
        raise InputFormatError(f"unknown census plan {name!r} (known: {known})")


def _env_int(name: str) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise InputFormatError(f"{name} must be an integer, got {raw!r}")


def _env_flag(name: str) -> bool:
    return os.getenv(name, "").strip().lower() in ("1", "true", "yes", "on")


class Config:
    """Global configuration manager"""

    def __init__(self, plans_path: Optional[Path] = None):
        env_path = os.getenv("FEDDER_PLANS")
        self.plans_path = plans_path or (Path(env_path) if env_path else self._default_plans_path())
        self.plan_book = self.load_plans()
        self.seed_override = _env_int("FEDDER_SEED")
        self.workers_override = _env_int("FEDDER_WORKERS")
        self.log_json = _env_flag("FEDDER_LOG_JSON")
        self.otlp_endpoint = os.getenv("OTLP_ENDPOINT") or None
        self.service_name = os.getenv("SERVICE_NAME", "fedder-dp1")

    @staticmethod
    def _default_plans_path() -> Path:
        return Path(__file__).parent / "plans" / "default.yaml"

    @property
    def census(self) -> CensusDefaults:
        return self.plan_book.defaults

    @property
    def classifier(self) -> ClassifierConfig:
        return self.plan_book.classifier

    def load_plans(self) -> PlanBook:
        return PlanBook.from_yaml(self.plans_path)

    def reload_plans(self) -> None:
        logger.info("reloading_plans", path=str(self.plans_path))
        self.plan_book = self.load_plans()

    def resolve_seed(self, requested: Optional[int]) -> Optional[int]:
        """FEDDER_SEED wins over the command line; None leaves the choice to the plan"""
        if self.seed_override is not None:
            return self.seed_override
        return requested

    def resolve_workers(self, requested: Optional[int]) -> int:
        if requested is not None:
            return requested
        if self.workers_override is not None:
            return self.workers_override
        return self.census.workers


# Global config instance
_config: Optional[Config] = None


def get_config() -> Config:
    """Get global config instance"""
    global _config
    if _config is None:
        _config = Config()
    return _config


def reload_config() -> Config:
    """Rebuild the global config from the environment and plan file"""
    global _config
    _config = Config()
    return _config
