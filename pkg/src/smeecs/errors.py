"""Exception types shared across the package."""


class DegenerateStateError(ValueError):
    """The requested superposition is (numerically) the zero vector.

    The odd combination of two coherent branches vanishes identically at
    zero field, and the normalization bracket can collapse below rounding
    level nearby; no state exists there, so no concurrence is reported.
    """


class TruncationTooSmallError(ValueError):
    """The Fock cutoff is below the safe-truncation rule, or amplitude
    mass is still visible in the last rows/columns of the truncated grid."""


class InternalConsistencyError(RuntimeError):
    """A quantity that is nonnegative / bounded by construction came out
    outside its range by more than tolerated rounding noise.  Indicates a
    bug rather than a bad input, hence not a ValueError."""
