from enum import Enum

from pydantic import BaseModel


class CheckStatus(str, Enum):
    """Output strings for check results"""

    okay = "PASS"
    error = "FAIL"


class CheckResult(BaseModel):
    """A single oracle comparison or invariant check"""

    name: str
    status: CheckStatus = CheckStatus.okay
    detail: str = ""

    def __str__(self):
        return f"{self.status.value} {self.name} {self.detail}".rstrip()


class ValidationReport(BaseModel):
    """Every check run by `beamnet validate`"""

    checks: list[CheckResult] = []

    def __iter__(self):
        """Allow iterating over the checks for easy reporting"""
        return iter(self.checks)

    @property
    def has_errors(self) -> bool:
        return any(x.status == CheckStatus.error for x in self.checks)
