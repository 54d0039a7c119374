"""beamnet.schemas

Pydantic models for configuration and for every value the simulator emits
"""

from .beams import BeamReportRow, BeamStatus, SectorBeam
from .config import PeripheralRule, WorldConfig
from .manifest import RunManifest
from .metrics import (
    GraphMode,
    MetricsRecord,
    SummaryRow,
    TrialDiagnostics,
    TrialFailure,
    TrialResult,
)
from .validation import CheckResult, CheckStatus, ValidationReport
