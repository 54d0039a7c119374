from enum import Enum
try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from pydantic import BaseModel, ConfigDict, Field, model_validator


class GraphMode(str, Enum):
    """Which link set a metric was measured on.

    * `omni`: the unit-disk graph
    * `directional`: the unit-disk graph plus acknowledged beam links
    """

    omni = "omni"
    directional = "directional"


class MetricsRecord(BaseModel):
    """Outputs of one trial.

    `frac_centroid` is regions / n; unidirectional links are beam coverage that was never
    acknowledged and therefore never enters the undirected measures.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    gradient: int = Field(ge=1)
    seed: int = Field(ge=0)
    apl_omni: float = Field(ge=0)
    apl_dir: float = Field(ge=0)
    cc_omni: float = Field(ge=0, le=1)
    cc_dir: float = Field(ge=0, le=1)
    components_omni: int = Field(ge=1)
    components_dir: int = Field(ge=1)
    frac_peripheral: float = Field(ge=0, le=1)
    frac_centroid: float = Field(ge=0, le=1)
    unidirectional_links: int = Field(ge=0)

    @model_validator(mode="after")
    def beams_never_split_components(self) -> Self:
        if self.components_dir > self.components_omni:
            raise ValueError("directional graph cannot have more components than omni")
        return self

    def metric(self, name: str, mode: GraphMode) -> float:
        """Value of a metric family for one mode; trial-wide fractions ignore the mode"""
        if name in ("apl", "cc", "components"):
            suffix = "omni" if mode == GraphMode.omni else "dir"
            return getattr(self, f"{name}_{suffix}")
        if name == "unidirectional_links":
            return 0 if mode == GraphMode.omni else self.unidirectional_links
        return getattr(self, name)


class TrialDiagnostics(BaseModel):
    """Protocol bookkeeping that accompanies a MetricsRecord"""

    n: int
    gradient: int
    seed: int
    regions: int
    peripherals: int
    beams_formed: int
    beams_dropped: int
    gradient_violations: int
    formation_rounds: int
    averaging_rounds: int
    dropped_messages: int
    reselections: int
    largest_component_omni: float
    largest_component_dir: float


class TrialResult(BaseModel):
    record: MetricsRecord
    diagnostics: TrialDiagnostics


class TrialFailure(BaseModel):
    """A trial excluded from statistics, and why"""

    n: int
    gradient: int
    seed: int
    reason: str


class SummaryRow(BaseModel):
    """Mean and 95% Student-t half-width of one metric over one (n, gradient, mode) group.

    Groups with fewer than two samples are flagged `insufficient` and carry no half-width.
    """

    metric: str
    n: int
    gradient: int
    mode: GraphMode
    mean: float
    ci95_halfwidth: float | None = Field(None, ge=0)
    sample_count: int = Field(ge=1)
    insufficient: bool = False
