"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument violates a documented precondition."""


class ValidationError(DomainError):
    """Input data (files, schemas, structures) failed validation."""


class ConsistencyError(RuntimeError):
    """An internal consistency requirement failed (e.g. a 2-cell with
    non-identity boundary voltage)."""


class ResourceLimitError(RuntimeError):
    """A bounded search exceeded its budget."""

    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound


class PipelineError(RuntimeError):
    """A multi-stage pipeline failed; carries the name of the stage."""

    def __init__(self, stage, message):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage
