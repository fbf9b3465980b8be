"""Exception hierarchy shared by all modules."""


class CloneOptError(Exception):
    """Base class for all library errors."""


class DimensionGuardError(CloneOptError):
    """A dense full-tensor construction would exceed the configured size guard."""


class BasisError(CloneOptError):
    """A density operator or channel carries an unknown or incompatible basis tag."""


class ChannelPropertyError(CloneOptError):
    """A channel fails a structural property (trace preservation, covariance,
    permutation invariance) beyond the stated tolerance."""
