import math
from enum import Enum
from typing import Annotated

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    ValidationInfo,
    field_validator,
)

from beamnet.utils.helpers import parse_angle

TWO_PI = 2 * math.pi


class PeripheralRule(str, Enum):
    """How a node compares its hopcount with its same-region neighbors.

    * `all` (default): peripheral when no same-region neighbor is farther from the centroid
    * `any`: peripheral when at least one same-region neighbor is no farther from the centroid
    """

    all_ = "all"
    any_ = "any"


class WorldConfig(BaseModel):
    """Every parameter of a single simulated trial.

    Angles accept radians or `pi` fractions (`2pi/64`). `max_rounds` defaults to four rounds
    per node when left unset.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    field_size: float = Field(10.0, gt=0, description="Side length L of the square field")
    radio_range: float = Field(1.0, gt=0, description="Omnidirectional range r0")
    node_count: int = Field(120, ge=1, description="Number of nodes N")
    gradient: int = Field(3, ge=1, description="Maximum hopcount g inside a region")
    alpha: float = Field(
        2.0, ge=1, description="Path-loss exponent used to stretch sector range"
    )
    elements_min: int = Field(1, ge=1, description="Fewest antenna elements a node picks")
    elements_max: int = Field(16, ge=1, description="Most antenna elements a node picks")
    epsilon: float = Field(
        0.05, gt=0, description="Centroid self-identification margin in virtual space"
    )
    delta: float = Field(1e-6, gt=0, description="Averaging convergence tolerance")
    sweep_step: Annotated[float, BeforeValidator(parse_angle)] = Field(
        TWO_PI / 64, gt=0, description="Azimuth step of the beam sweep (radians)"
    )
    seed: int = Field(0, ge=0, lt=2**64, description="Master seed of the trial")
    averaging_max_rounds: int = Field(
        50_000, ge=1, description="Round bound of the coordinate averaging"
    )
    max_rounds: int | None = Field(
        None, ge=1, description="Round bound of region formation (default 4 x N)"
    )
    deterministic_ties: bool = Field(
        False, description="Break equal head offers by lower head id instead of a coin"
    )
    peripheral_rule: PeripheralRule = Field(
        PeripheralRule.all_, description="Peripheral test: all or any neighbor"
    )

    @field_validator("elements_max")
    @classmethod
    def elements_ordered(cls, value: int, info: ValidationInfo) -> int:
        minimum = info.data.get("elements_min")
        if minimum is not None and value < minimum:
            raise ValueError(f"must be at least elements_min ({minimum})")
        return value

    @field_validator("sweep_step")
    @classmethod
    def sweep_step_divides_circle(cls, value: float) -> float:
        steps = TWO_PI / value
        if abs(steps - round(steps)) > 1e-9 * steps:
            raise ValueError("must divide 2pi evenly")
        return value

    @property
    def engine_max_rounds(self) -> int:
        """Round bound of region formation"""
        return self.max_rounds or 4 * self.node_count

    def for_trial(self, node_count: int, gradient: int, seed: int) -> Self:
        """Returns a copy configured for one sweep cell"""
        return self.model_copy(
            update={"node_count": node_count, "gradient": gradient, "seed": seed}
        )
