from datetime import datetime, timezone
from typing import Any

from pydantic import BaseModel, Field

from .config import WorldConfig


def _now() -> datetime:
    return datetime.now(timezone.utc)


class RunManifest(BaseModel):
    """Written next to every set of artifacts so a run can be reproduced from its output"""

    config: WorldConfig
    command: str
    output_dir: str
    version: str
    timestamp: datetime = Field(default_factory=_now)
    # Subcommand-specific settings (sweep grid, seed count, worker count)
    parameters: dict[str, Any] = {}
