"""Exception hierarchy shared by every module of the package."""


class NoetherError(ValueError):
    """Base class for all errors raised by noether3."""


class DimensionMismatch(NoetherError):
    pass


class NotUnimodular(NoetherError):
    pass


class NonAbelian(NoetherError):
    pass


class CapExceeded(NoetherError):
    pass


class NotASubgroup(NoetherError):
    pass


class NotACocycle(NoetherError):
    pass


class NotElementaryAbelian2Group(NoetherError):
    pass


class ZeroInput(NoetherError):
    pass


class FactorizationLimit(NoetherError):
    pass


class SchemaMismatch(NoetherError):
    pass


class UnknownName(NoetherError, KeyError):
    pass


class UnknownCase(NoetherError, KeyError):
    pass


class CertificationFailed(NoetherError):
    pass
