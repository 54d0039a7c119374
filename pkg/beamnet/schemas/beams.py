import math
from enum import Enum
try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

TWO_PI = 2 * math.pi


class BeamStatus(str, Enum):
    """Outcome of a peripheral node's beam decision.

    * `formed`: a sector was raised and acknowledged by its centroid
    * `dropped`: a target existed but no unclaimed azimuth reached it
    * `omni`: no target was worth a beam, so the node stays omnidirectional
    """

    formed = "formed"
    dropped = "dropped"
    omni = "omni"


class SectorBeam(BaseModel):
    """A directional transmission under the sector model"""

    model_config = ConfigDict(frozen=True)

    origin: int = Field(ge=0)
    azimuth: float = Field(ge=0, lt=TWO_PI)
    width: float = Field(gt=0, le=TWO_PI + 1e-12)
    range: float = Field(gt=0)
    elements: int = Field(ge=1)

    @model_validator(mode="after")
    def width_matches_elements(self) -> Self:
        if not math.isclose(self.width * self.elements, TWO_PI, rel_tol=1e-12):
            raise ValueError("width must equal 2pi / elements")
        return self


class BeamReportRow(BaseModel):
    """One line of the beam report; azimuth and target are unset unless a beam formed"""

    peripheral: int
    elements: int
    azimuth: float | None = None
    width: float
    range: float
    target: int | None = None
    status: BeamStatus
