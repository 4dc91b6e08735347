"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes, so the distinction matters:
input/validation problems are the caller's fault (exit 3), contract and
invariant violations indicate a bug in the caller's usage or in the
algorithms themselves (exit 4).
"""


class InputError(ValueError):
    """Caller-supplied data is unusable (bad index, loop element, ...)."""


class FormatError(InputError):
    """An instance file could not be parsed at all."""


class ValidationError(InputError):
    """Parsed data violates a structural rule (overlap, bad capacity, ...)."""


class ContractError(RuntimeError):
    """A documented precondition of an operation was violated."""


class InvariantViolationError(RuntimeError):
    """A property the algorithms guarantee failed to hold.

    Carries a ``details`` dict with whatever state is useful for debugging
    (separating cuts, suffix candidates, part counters).
    """

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details

    def __str__(self) -> str:  # keep the dump visible in tracebacks
        base = super().__str__()
        if not self.details:
            return base
        dump = ", ".join(f"{k}={v!r}" for k, v in sorted(self.details.items()))
        return f"{base} [{dump}]"
