"""Exception hierarchy shared by all modules."""


class GTError(Exception):
    """Base class for every error raised by this package."""


class ShapeError(GTError):
    """Pattern or tableau data does not have the shape it claims."""


class InputError(GTError):
    """A precondition on an operation's input is violated."""


class MembershipError(GTError):
    """A pattern is not a member of the polytope it was paired with.

    Carries the full membership report so callers can see every violated
    constraint, not just the first.
    """

    def __init__(self, message, report):
        super().__init__(message)
        self.report = list(report)


class ScaleGuardError(GTError):
    """A brute-force oracle operation was asked to run above its size guard."""


class VerificationError(GTError):
    """An internal self-check failed; the result would not be trustworthy."""


class TilingDriftError(VerificationError):
    """A constructed pattern did not keep the tiling it was built from."""
