class BeamnetException(Exception):
    """Light wrapper around Exception that allows specifying defaults via class property"""

    detail = "Simulation failed."
    exit_code = 1

    def __init__(self, detail: str | None = None):
        if detail is not None:
            self.detail = detail
        super().__init__(self.detail)


class InputError(BeamnetException):
    """Raised when an argument falls outside the domain of the operation receiving it"""

    detail = "Invalid input."


class GraphInputError(InputError):
    """Raised when a node id or edge does not fit the graph it is used with"""

    detail = "Invalid node id for this graph."


class ConfigError(BeamnetException):
    """Raised when a configuration key is unknown or its value is out of range.

    `keys` lists every offending key so the CLI can name them all at once.
    """

    detail = "Invalid configuration."
    exit_code = 2
    keys: tuple[str, ...] = ()

    def __init__(self, detail: str | None = None, keys: tuple[str, ...] = ()):
        self.keys = tuple(keys)
        if detail is None and self.keys:
            detail = f"Invalid configuration for: {', '.join(self.keys)}"
        super().__init__(detail)


class ProtocolConvergenceError(BeamnetException):
    """Raised when a protocol phase is still active at its round bound"""

    detail = "Protocol did not converge within its round bound."


class ContractViolation(BeamnetException):
    """Raised when an operation is invoked without its precondition holding"""

    detail = "Operation precondition does not hold."


class ArtifactError(BeamnetException):
    """Raised when an input artifact cannot be read or an output cannot be written"""

    detail = "Unable to read or write artifact."
