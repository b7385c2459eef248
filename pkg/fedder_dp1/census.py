"""Exhaustive and sampled censuses of the Fedder verdict against the normal-form predicate.

Instances are indexed in mixed radix q over the free coefficients (slot order a1 .. a6,
coefficients in order within a slot, element order of ``FieldDesc.element``). Work is
cut into fixed chunks, independent of the worker count, and merged by summation, so a
census is a deterministic function of its CensusSpec and seed.
"""
import multiprocessing
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import structlog
from opentelemetry import trace

from .classify import SUPPORTED_CHARACTERISTICS, lemma_predicate
from .config import CensusDefaults, CensusPlanConfig
from .dp1 import FORM_DEGREES, SLOTS, DP1Equation, complete_square_cube, to_poly, to_record
from .errors import InfeasibleCensusError, InputFormatError, UnsupportedCharacteristicError
from .fedder import is_fsplit_hypersurface
from .fields import FieldDesc, field_of_order, make_field
from .mpoly import BinaryForm

logger = structlog.get_logger()
tracer = trace.get_tracer(__name__)

NORMALIZED_LAYOUTS: Dict[int, Tuple[str, ...]] = {
    2: ("a1", "a2", "a3", "a4", "a6"),
    3: ("a2", "a4", "a6"),
    5: ("a4", "a6"),
}

# span dimension of the slot constrained by the predicate (0 means the slot must vanish)
_CONSTRAINED: Dict[int, Dict[str, int]] = {
    5: {"a4": 0, "a6": 4},
    3: {"a2": 0, "a4": 4},
    2: {"a1": 0},
}


@lru_cache(maxsize=None)
def _census_field(p: int, q: int) -> FieldDesc:
    f = field_of_order(q)
    if f.p != p:
        raise InputFormatError(f"q = {q} is not a power of p = {p}")
    return f


@dataclass(frozen=True)
class CensusSpec:
    p: int
    q: int
    space: str = "normalized"
    mode: str = "exhaustive"
    samples: int = 0
    seed: int = 0
    workers: int = 1
    chunk_size: int = 4096
    pins: Mapping[str, BinaryForm] = field(default_factory=dict)
    max_exhaustive: int = 250_000_000
    progress_every: int = 16

    def __post_init__(self):
        if self.p not in SUPPORTED_CHARACTERISTICS:
            raise UnsupportedCharacteristicError(
                f"census is defined for p in {SUPPORTED_CHARACTERISTICS}, got {self.p}", self.p
            )
        if self.space not in ("normalized", "full"):
            raise InputFormatError(f"space must be 'normalized' or 'full', got {self.space!r}")
        if self.mode not in ("exhaustive", "sample"):
            raise InputFormatError(f"mode must be 'exhaustive' or 'sample', got {self.mode!r}")
        if self.mode == "sample" and self.samples <= 0:
            raise InputFormatError("sample mode needs a positive sample count")
        if self.workers < 1 or self.chunk_size < 1:
            raise InputFormatError("workers and chunk_size must be positive")
        field_ = self.field
        for slot, form in self.pins.items():
            if slot not in self.layout:
                raise InputFormatError(
                    f"cannot pin {slot}: not a coordinate of the {self.space} space"
                )
            if form.field != field_ or form.degree != FORM_DEGREES[slot]:
                raise InputFormatError(
                    f"pin for {slot} must be a degree-{FORM_DEGREES[slot]} form over {field_}"
                )

    @property
    def field(self) -> FieldDesc:
        return _census_field(self.p, self.q)

    @property
    def layout(self) -> Tuple[str, ...]:
        return SLOTS if self.space == "full" else NORMALIZED_LAYOUTS[self.p]

    @property
    def free_slots(self) -> Tuple[str, ...]:
        return tuple(s for s in self.layout if s not in self.pins)

    @property
    def dimension(self) -> int:
        return sum(FORM_DEGREES[s] + 1 for s in self.free_slots)

    @property
    def space_size(self) -> int:
        return self.q**self.dimension

    @property
    def instances(self) -> int:
        return self.space_size if self.mode == "exhaustive" else self.samples

    @property
    def chunks(self) -> int:
        return max(1, -(-self.instances // self.chunk_size))

    @classmethod
    def from_plan(
        cls,
        plan: CensusPlanConfig,
        defaults: CensusDefaults,
        seed: Optional[int] = None,
        workers: Optional[int] = None,
    ) -> "CensusSpec":
        field_ = field_of_order(plan.order)
        return cls(
            p=plan.p,
            q=plan.order,
            space=plan.space,
            mode=plan.mode,
            samples=plan.samples,
            seed=next(s for s in (seed, plan.seed, defaults.rng_seed) if s is not None),
            workers=workers or defaults.workers,
            chunk_size=defaults.chunk_size,
            pins={slot: pin_form(field_, slot, value) for slot, value in plan.pins.items()},
            max_exhaustive=defaults.max_exhaustive_instances,
            progress_every=defaults.progress_every,
        )


def pin_form(field_: FieldDesc, slot: str, value) -> BinaryForm:
    """A pinned slot: 0 for the zero form, or a full coefficient list"""
    if slot not in FORM_DEGREES:
        raise InputFormatError(f"unknown slot {slot!r}")
    degree = FORM_DEGREES[slot]
    if value == 0 or value == "0":
        return BinaryForm.zero(field_, degree)
    values = list(value) if isinstance(value, (list, tuple)) else str(value).split()
    if len(values) != degree + 1:
        raise InputFormatError(f"pin for {slot} needs {degree + 1} coefficients")
    return BinaryForm.of(field_, [field_.parse(str(v)) for v in values])


@dataclass(frozen=True)
class Mismatch:
    index: int
    record: Dict
    f_split: bool
    predicate: bool
    witness: Optional[str]


@dataclass(frozen=True)
class CensusSummary:
    spec: CensusSpec
    instances: int
    non_split: int
    predicate_true: int
    mismatches: Tuple[Mismatch, ...]
    expected_non_split: Optional[int]
    wall_time: float

    @property
    def ok(self) -> bool:
        if self.mismatches:
            return False
        return self.expected_non_split is None or self.expected_non_split == self.non_split


def decode_instance(spec: CensusSpec, index: int) -> DP1Equation:
    field_ = spec.field
    q = spec.q
    forms = dict(spec.pins)
    for slot in spec.free_slots:
        coeffs = []
        for _ in range(FORM_DEGREES[slot] + 1):
            index, digit = divmod(index, q)
            coeffs.append(field_.element(digit))
        forms[slot] = BinaryForm(field_, FORM_DEGREES[slot], tuple(coeffs))
    return DP1Equation.of(field_, **forms)


def analytic_non_split_count(spec: CensusSpec) -> Optional[int]:
    """Closed-form number of predicate-satisfying instances of an exhaustive normalized census"""
    if spec.mode != "exhaustive" or spec.space != "normalized":
        return None
    constrained = _CONSTRAINED[spec.p]
    total = 1
    for slot in spec.layout:
        if slot in spec.pins:
            if slot in constrained and not _pin_satisfies(spec.p, slot, spec.pins[slot]):
                return 0
            continue
        dim = constrained.get(slot, FORM_DEGREES[slot] + 1)
        total *= spec.q**dim
    return total


def _pin_satisfies(p: int, slot: str, form: BinaryForm) -> bool:
    if _CONSTRAINED[p][slot] == 0:
        return form.is_zero()
    d = form.degree
    outside = range(2, d - 1)
    return all(form.coeffs[j].is_zero() for j in outside)


@dataclass(frozen=True)
class _ChunkTask:
    spec: CensusSpec
    chunk: int


@dataclass
class _ChunkResult:
    chunk: int
    instances: int = 0
    non_split: int = 0
    predicate_true: int = 0
    mismatches: List[Mismatch] = field(default_factory=list)


def _chunk_indices(spec: CensusSpec, chunk: int) -> Sequence[int]:
    start = chunk * spec.chunk_size
    stop = min(start + spec.chunk_size, spec.instances)
    if spec.mode == "exhaustive":
        return range(start, stop)
    rng = random.Random(f"{spec.seed}:{chunk}")
    size = spec.space_size
    return [rng.randrange(size) for _ in range(stop - start)]


def check_instance(eq: DP1Equation, normalized_space: bool) -> Tuple[bool, bool, Optional[str]]:
    """(f_split, predicate, witness) for one equation"""
    verdict = is_fsplit_hypersurface(to_poly(eq), truncate=True)
    completed = eq if normalized_space else complete_square_cube(eq)
    predicate, _ = lemma_predicate(completed)
    return verdict.f_split, predicate, verdict.witness_text()


def _run_chunk(task: _ChunkTask) -> _ChunkResult:
    spec = task.spec
    result = _ChunkResult(task.chunk)
    normalized_space = spec.space == "normalized"
    with tracer.start_as_current_span("census_chunk") as span:
        span.set_attribute("chunk", task.chunk)
        for index in _chunk_indices(spec, task.chunk):
            eq = decode_instance(spec, index)
            f_split, predicate, witness = check_instance(eq, normalized_space)
            result.instances += 1
            result.non_split += not f_split
            result.predicate_true += predicate
            if (not f_split) != predicate:
                result.mismatches.append(
                    Mismatch(index, to_record(eq), f_split, predicate, witness)
                )
        span.set_attribute("instances", result.instances)
    return result


class CensusEngine:
    """Runs a census over a worker pool and folds chunk results into a summary"""

    def run(self, spec: CensusSpec) -> CensusSummary:
        with tracer.start_as_current_span("census") as span:
            span.set_attribute("p", spec.p)
            span.set_attribute("q", spec.q)
            span.set_attribute("mode", spec.mode)
            span.set_attribute("instances", spec.instances)

            if spec.mode == "exhaustive" and spec.instances > spec.max_exhaustive:
                raise InfeasibleCensusError(spec.instances, spec.max_exhaustive)

            logger.info(
                "census_started",
                p=spec.p,
                q=spec.q,
                space=spec.space,
                mode=spec.mode,
                instances=spec.instances,
                chunks=spec.chunks,
                workers=spec.workers,
                seed=spec.seed,
            )
            started = time.perf_counter()
            tasks = [_ChunkTask(spec, k) for k in range(spec.chunks)]
            results: List[_ChunkResult] = []
            if spec.workers == 1:
                for task in tasks:
                    results.append(_run_chunk(task))
                    self._progress(spec, results)
            else:
                with multiprocessing.Pool(processes=spec.workers) as pool:
                    for res in pool.imap_unordered(_run_chunk, tasks):
                        results.append(res)
                        self._progress(spec, results)

            results.sort(key=lambda r: r.chunk)
            mismatches = tuple(
                sorted((m for r in results for m in r.mismatches), key=lambda m: m.index)
            )
            summary = CensusSummary(
                spec=spec,
                instances=sum(r.instances for r in results),
                non_split=sum(r.non_split for r in results),
                predicate_true=sum(r.predicate_true for r in results),
                mismatches=mismatches,
                expected_non_split=analytic_non_split_count(spec),
                wall_time=time.perf_counter() - started,
            )
            span.set_attribute("non_split", summary.non_split)
            span.set_attribute("mismatches", len(mismatches))
            logger.info(
                "census_finished",
                instances=summary.instances,
                non_split=summary.non_split,
                expected_non_split=summary.expected_non_split,
                mismatches=len(mismatches),
                wall_time=round(summary.wall_time, 3),
            )
            for m in mismatches[:10]:
                logger.warning(
                    "census_mismatch", index=m.index, f_split=m.f_split, witness=m.witness
                )
            return summary

    def _progress(self, spec: CensusSpec, results: Sequence[_ChunkResult]) -> None:
        done = len(results)
        if done % max(1, spec.progress_every) and done != spec.chunks:
            return
        logger.info(
            "census_chunk_done",
            done=done,
            total=spec.chunks,
            instances=sum(r.instances for r in results),
            non_split=sum(r.non_split for r in results),
        )


def run_census(spec: CensusSpec) -> CensusSummary:
    return CensusEngine().run(spec)


def spec_for(
    p: int,
    q: Optional[int] = None,
    *,
    pins: Optional[Mapping[str, object]] = None,
    **kwargs,
) -> CensusSpec:
    """Convenience constructor taking pins as 0 / coefficient lists"""
    field_ = make_field(p) if q is None else field_of_order(q)
    built = {slot: pin_form(field_, slot, v) for slot, v in (pins or {}).items()}
    return CensusSpec(p=p, q=q or p, pins=built, **kwargs)
