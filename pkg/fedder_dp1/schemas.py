"""Pydantic schemas for reports, using Pydantic v2 style.

Every top-level document carries ``"schema": "fedder-dp1/1"``; ``model_json_schema()`` of
these models is the published format.
"""
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .census import CensusSummary
from .classify import ClassificationReport
from .dp1 import DP1Equation, SmoothnessReport, field_record, to_poly, to_record
from .fedder import FedderVerdict
from .fields import FieldDesc
from .mpoly import BinaryForm, MultiPoly
from .pgl2 import DeltaClass
from .unifactor import DivisorP1

SCHEMA_ID = "fedder-dp1/1"


class InvocationModel(BaseModel):
    """How the report was produced"""
    subcommand: str
    argv: List[str] = Field(default_factory=list)
    char: Optional[int] = None
    field: Optional[int] = None
    seed: Optional[int] = None
    workers: Optional[int] = None


class _Document(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_id: str = Field(SCHEMA_ID, alias="schema", description="Format version")
    invocation: Optional[InvocationModel] = None


class FieldModel(BaseModel):
    p: int
    n: int = 1
    modulus: Optional[List[int]] = Field(
        None, description="Ascending coefficients, leading 1 included"
    )


class EquationModel(BaseModel):
    field: FieldModel
    a1: List[str]
    a2: List[str]
    a3: List[str]
    a4: List[str]
    a6: List[str]
    text: str


class FedderVerdictModel(BaseModel):
    f_split: bool
    witness: Optional[str] = Field(None, description="Monomial of f^(p-1) with all exponents < p")
    witness_coefficient: Optional[str] = None
    power_terms: int = 0


class FedderReport(_Document, FedderVerdictModel):
    """Output of ``check``"""
    polynomial: str
    variables: List[str]
    field: FieldModel


class PointModel(BaseModel):
    point: str
    multiplicity: int


class FactorModel(BaseModel):
    form: str
    multiplicity: int


class DivisorReport(_Document):
    """Output of ``roots``"""
    form: str
    field: FieldModel
    splitting_field: FieldModel
    divisor: str
    degree: int
    points: List[PointModel]
    squarefree: List[FactorModel]


class SmoothnessModel(BaseModel):
    verdict: str
    method: str
    witnesses: List[str] = Field(default_factory=list)
    search_bound: int
    exhaustive: bool = False
    searched_degrees: List[int] = Field(default_factory=list)


class DeltaClassModel(BaseModel):
    label: str
    witness: Optional[str] = Field(
        None, description="Matrix M with M . D equal to the reference divisor"
    )
    divisor: Optional[str] = None


class ClassificationReportModel(_Document):
    """Output of ``classify``"""
    p: int
    q: int
    equation: EquationModel
    normalized: EquationModel
    fedder: FedderVerdictModel
    lemma_predicate: bool
    normal_form: str
    j_zero: bool
    delta_class: DeltaClassModel
    discriminant: str
    smoothness: SmoothnessModel
    fibers_checked: int
    fibers_agree: bool
    consistent: bool
    remark_witness: bool


class MismatchModel(BaseModel):
    index: int
    record: Dict[str, Any]
    f_split: bool
    predicate: bool
    witness: Optional[str] = None


class CensusSummaryModel(_Document):
    """Output of ``census``"""
    p: int
    q: int
    space: str
    mode: str
    samples: int
    seed: int
    workers: int
    chunk_size: int
    pins: Dict[str, List[str]] = Field(default_factory=dict)
    instances: int
    non_split: int
    predicate_true: int
    expected_non_split: Optional[int] = None
    mismatches: List[MismatchModel] = Field(default_factory=list)
    wall_time: float
    ok: bool


# builders


def field_model(field: FieldDesc) -> FieldModel:
    return FieldModel(**field_record(field))


def equation_model(eq: DP1Equation) -> EquationModel:
    record = to_record(eq)
    record["field"] = field_model(eq.field)
    return EquationModel(**record, text=str(to_poly(eq)))


def verdict_model(verdict: FedderVerdict) -> FedderVerdictModel:
    return FedderVerdictModel(
        f_split=verdict.f_split,
        witness=verdict.witness_text(),
        witness_coefficient=(
            None if verdict.witness_coefficient is None else str(verdict.witness_coefficient)
        ),
        power_terms=verdict.power_terms,
    )


def fedder_report(
    f: MultiPoly, verdict: FedderVerdict, invocation: Optional[InvocationModel] = None
) -> FedderReport:
    return FedderReport(
        invocation=invocation,
        polynomial=str(f),
        variables=list(f.alphabet.names),
        field=field_model(f.field),
        **verdict_model(verdict).model_dump(),
    )


def divisor_report(
    g: BinaryForm,
    divisor: DivisorP1,
    squarefree: List[Tuple[BinaryForm, int]],
    invocation: Optional[InvocationModel] = None,
) -> DivisorReport:
    return DivisorReport(
        invocation=invocation,
        form=str(g),
        field=field_model(g.field),
        splitting_field=field_model(divisor.field),
        divisor=str(divisor),
        degree=divisor.degree,
        points=[PointModel(point=str(pt), multiplicity=m) for pt, m in divisor.points],
        squarefree=[FactorModel(form=str(h), multiplicity=m) for h, m in squarefree],
    )


def smoothness_model(report: SmoothnessReport) -> SmoothnessModel:
    return SmoothnessModel(
        verdict=report.verdict.value,
        method=report.method,
        witnesses=report.witness_text(),
        search_bound=report.search_bound,
        exhaustive=report.exhaustive,
        searched_degrees=list(report.searched_degrees),
    )


def delta_class_model(cls: DeltaClass) -> DeltaClassModel:
    return DeltaClassModel(
        label=cls.label.value,
        witness=str(cls.witness) if cls.witness is not None else None,
        divisor=str(cls.divisor) if cls.divisor is not None else None,
    )


def classification_model(
    report: ClassificationReport, invocation: Optional[InvocationModel] = None
) -> ClassificationReportModel:
    return ClassificationReportModel(
        invocation=invocation,
        p=report.p,
        q=report.equation.field.order,
        equation=equation_model(report.equation),
        normalized=equation_model(report.normalized),
        fedder=verdict_model(report.fedder),
        lemma_predicate=report.lemma_predicate,
        normal_form=report.normal_form,
        j_zero=report.condition_c.j_zero,
        delta_class=delta_class_model(report.condition_c.delta_class),
        discriminant=str(report.discriminant),
        smoothness=smoothness_model(report.smoothness),
        fibers_checked=report.fibers.checked,
        fibers_agree=report.fibers.agree,
        consistent=report.consistent,
        remark_witness=report.remark_witness,
    )


def census_model(
    summary: CensusSummary, invocation: Optional[InvocationModel] = None
) -> CensusSummaryModel:
    spec = summary.spec
    return CensusSummaryModel(
        invocation=invocation,
        p=spec.p,
        q=spec.q,
        space=spec.space,
        mode=spec.mode,
        samples=spec.samples,
        seed=spec.seed,
        workers=spec.workers,
        chunk_size=spec.chunk_size,
        pins={slot: [str(c) for c in form.coeffs] for slot, form in spec.pins.items()},
        instances=summary.instances,
        non_split=summary.non_split,
        predicate_true=summary.predicate_true,
        expected_non_split=summary.expected_non_split,
        mismatches=[
            MismatchModel(
                index=m.index,
                record=m.record,
                f_split=m.f_split,
                predicate=m.predicate,
                witness=m.witness,
            )
            for m in summary.mismatches
        ],
        wall_time=round(summary.wall_time, 6),
        ok=summary.ok,
    )


def dump_json(model: BaseModel) -> str:
    return model.model_dump_json(by_alias=True, indent=2)


def flatten(model: BaseModel) -> List[Tuple[str, str]]:
    """(dotted key, value) pairs of the JSON document, for human-readable output"""
    out: List[Tuple[str, str]] = []

    def walk(prefix: str, value: Any) -> None:
        if isinstance(value, dict):
            for key, sub in value.items():
                walk(f"{prefix}.{key}" if prefix else key, sub)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            for i, sub in enumerate(value):
                walk(f"{prefix}[{i}]", sub)
        elif isinstance(value, list):
            out.append((prefix, ", ".join(str(v) for v in value)))
        elif isinstance(value, bool):
            out.append((prefix, "true" if value else "false"))
        else:
            out.append((prefix, "null" if value is None else str(value)))

    walk("", model.model_dump(mode="json", by_alias=True, exclude={"invocation"}))
    return out
