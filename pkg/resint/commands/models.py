from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, model_validator


class RunConfig(BaseModel):
    """Validated command-line input of one run"""

    command: Literal["quantities", "bench", "normalform", "check"]
    spec_path: Optional[Path] = None
    point_path: Optional[Path] = None
    k: Optional[int] = Field(default=None, ge=1)
    order: Optional[int] = Field(default=None, ge=4)
    algorithm: Optional[Literal["1", "2", "both"]] = None
    json_output: bool = False
    seed: Optional[int] = None
    out: Optional[Path] = None
    component: Optional[int] = Field(default=None, ge=1, le=9)
    samples: Optional[int] = Field(default=None, ge=1)
    reversible: bool = False
    timing: bool = False
    verify: bool = False

    @model_validator(mode="after")
    def check_inputs(self) -> "RunConfig":
        if self.command in ("quantities", "normalform") and self.spec_path is None:
            raise ValueError(f"{self.command} needs --spec")
        if self.command == "check":
            selected = sum([self.point_path is not None, self.component is not None, self.reversible])
            if selected != 1:
                raise ValueError("check needs exactly one of --point, --component, --reversible")
        return self


class QuantityModel(BaseModel):
    k: int
    term_count: int
    terms: List[Dict[str, Any]]


class QuantitiesSummary(BaseModel):
    spec: Dict[str, Any]
    k: int
    algorithm: int
    term_count: List[int]
    elapsed_ms: Optional[float] = None


class QuantitiesReport(BaseModel):
    parameters: List[str]
    quantities: List[QuantityModel]
    summaries: List[QuantitiesSummary]
    agree: Optional[bool] = None


class BenchRow(BaseModel):
    set: str
    k: int
    algorithm: int
    elapsed_s: float
    term_count: int
    reference: Optional[int] = None

    @property
    def matches(self) -> Optional[bool]:
        return None if self.reference is None else self.reference == self.term_count


class BenchReport(BaseModel):
    rows: List[BenchRow]
    mismatches: int


class NormalFormReport(BaseModel):
    resonant_order: int
    order: int
    Y1: List[str]
    Y2: List[str]
    Y3: List[str]
    sum: List[str]
    linear_equations: List[int]
    linear_through_order: bool
    integrable_through_order: bool
    first_nonzero_residual: Optional[int] = None
    first_nonzero_g: Optional[int] = None
    agree: Optional[bool] = None


class ConditionsReport(BaseModel):
    point: Dict[str, str]
    components_satisfied: List[int]
    g_values: List[str]
    izeta_zero: bool
    all_g_vanish: bool
    seed: Optional[int] = None
    normal_form: Optional[NormalFormReport] = None


class ComponentCheckReport(BaseModel):
    component: int
    order: int
    samples: List[ConditionsReport]
    failures: List[str]

    @property
    def passed(self) -> bool:
        return not self.failures


class ReversibleSample(BaseModel):
    seed: int
    point: Dict[str, str]
    matrix: Dict[str, str]
    izeta_zero: bool
    reversible: bool
    g_values: List[str]


class ReversibleCheckReport(BaseModel):
    samples: List[ReversibleSample]
    failures: List[str]
