"""Exception types shared across the package."""


class ArgumentError(ValueError):
    """An argument violates a documented precondition."""


class DegeneracyError(ValueError):
    """A matrix or lattice is singular / rank-deficient where it must not be."""


class ResourceError(RuntimeError):
    """A computation would exceed its configured memory or time budget."""


class OverflowLimitError(OverflowError):
    """An exact integer result exceeds the supported 64-bit range."""


class CertificateError(ValueError):
    """An exact certificate identity failed; `identity` names the check."""

    def __init__(self, identity: str, detail: str = ""):
        self.identity = identity
        msg = identity if not detail else f"{identity}: {detail}"
        super().__init__(msg)
