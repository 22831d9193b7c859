"""Brute-force certification in a truncated two-mode number basis.

Amplitudes here are assembled from exponentials, powers and factorials
alone — no Laguerre or Hermite evaluation anywhere — so agreement with
the closed-form results is an independent check, not a tautology.  The
cost is exponential suppression management: the basis is truncated at a
cutoff chosen so the neglected tail is provably below a declared
tolerance, and the construction refuses to hand back a state that fails
that certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .entanglement import ConcurrenceResult, EvalPath
from .errors import (
    DegenerateStateError,
    InternalConsistencyError,
    TruncationTooSmallError,
)
from .states import Sign, StateSpec

__all__ = [
    "TAIL_TOLERANCE",
    "Mode",
    "BipartiteAmplitudes",
    "default_truncation",
    "coherent_amplitudes",
    "photon_added_amplitudes",
    "build_state",
    "reduced_purity",
    "concurrence_oracle",
]

# Mass allowed in the last two rows/columns of a certified amplitude grid.
TAIL_TOLERANCE = 1e-12

# Squared norms below this are a vanished superposition, not a state.
_NORM_FLOOR = 1e-28

# Poisson weights exp(-x/2) underflow around x = 1450; stop well short so
# every amplitude stays meaningfully representable.
_MAX_FIELD = 600.0


class Mode(Enum):
    """Which mode survives the partial trace."""

    A = "a"
    B = "b"


@dataclass(frozen=True)
class BipartiteAmplitudes:
    """A normalized two-mode state on a truncated number-basis grid.

    Attributes
    ----------
    amps : numpy.ndarray
        Complex array of shape ``(trunc, trunc)``; ``amps[i, j]`` is the
        amplitude on ``|i>|j>``.  Unit Frobenius norm; marked read-only.
    trunc : int
        The cutoff (levels 0 .. trunc-1 per mode).
    norm_sq : float
        Squared norm of the *un-normalized* superposition, i.e. the
        brute-force value of <state|state> before normalization — directly
        comparable to the closed-form normalization constants.
    """

    amps: np.ndarray
    trunc: int
    norm_sq: float


def default_truncation(x: float, m: int) -> int:
    """Safe Fock cutoff for field intensity x and excitation order m.

    ``ceil(x + 10 sqrt(x+1) + m + 10)``: the Poisson peak, ten standard
    deviations of headroom, the excitation shift, and a floor.
    """
    return math.ceil(x + 10.0 * math.sqrt(x + 1.0) + m + 10.0)


def coherent_amplitudes(alpha: complex, trunc: int) -> np.ndarray:
    """Number-basis amplitudes of |alpha> up to level trunc - 1.

    Built by the forward recurrence ``c_{n+1} = c_n alpha / sqrt(n+1)``
    starting at ``c_0 = exp(-|alpha|^2 / 2)``, so no factorial or power
    overflows on the way.
    """
    alpha = complex(alpha)
    x = abs(alpha) ** 2
    if x > _MAX_FIELD:
        raise ValueError(
            f"|alpha|^2 = {x:g} beyond the oracle's representable range ({_MAX_FIELD:g})"
        )
    c = np.empty(trunc, dtype=complex)
    c[0] = math.exp(-0.5 * x)
    for n in range(trunc - 1):
        c[n + 1] = c[n] * alpha / math.sqrt(n + 1.0)
    return c


def _shift_weight(k: int, m: int) -> float:
    """sqrt((k+m)! / k!), the amplitude factor of an m-fold creation."""
    rising = math.prod(range(k + 1, k + m + 1))
    try:
        return math.sqrt(float(rising))
    except OverflowError:
        return math.exp(0.5 * (math.lgamma(k + m + 1) - math.lgamma(k + 1)))


def photon_added_amplitudes(alpha: complex, m: int, trunc: int) -> np.ndarray:
    """Number-basis amplitudes of the un-normalized state (a^dag)^m |alpha>."""
    if m < 0:
        raise ValueError("excitation number m must be >= 0")
    c = coherent_amplitudes(alpha, trunc)
    if m == 0:
        return c
    u = np.zeros(trunc, dtype=complex)
    for k in range(trunc - m):
        u[k + m] = c[k] * _shift_weight(k, m)
    return u


def build_state(spec: StateSpec, trunc: int | None = None) -> BipartiteAmplitudes:
    """Construct the normalized state grid for a state specification.

    Parameters
    ----------
    spec : StateSpec
        The state parameters.
    trunc : int, optional
        Fock cutoff; defaults to :func:`default_truncation`.  An explicit
        value below the default rule is rejected.

    Returns
    -------
    BipartiteAmplitudes
        Normalized amplitudes plus the raw squared norm.

    Raises
    ------
    TruncationTooSmallError
        If ``trunc`` is below the safe rule, or amplitude mass above
        ``TAIL_TOLERANCE`` is visible in the last two rows/columns after
        normalization.
    DegenerateStateError
        If the superposition norm collapses below rounding level (the odd
        state at alpha = 0).
    """
    needed = default_truncation(spec.x, spec.m)
    if trunc is None:
        trunc = needed
    elif trunc < needed:
        raise TruncationTooSmallError(
            f"trunc = {trunc} below the safe rule ({needed}) for this state"
        )
    u_pos = photon_added_amplitudes(spec.alpha, spec.m, trunc)
    v_pos = coherent_amplitudes(spec.alpha, trunc)
    u_neg = photon_added_amplitudes(-spec.alpha, spec.m, trunc)
    v_neg = coherent_amplitudes(-spec.alpha, trunc)
    grid = np.outer(u_pos, v_pos)
    if spec.sign is Sign.PLUS:
        grid += np.outer(u_neg, v_neg)
    else:
        grid -= np.outer(u_neg, v_neg)
    norm_sq = float(np.vdot(grid, grid).real)
    if norm_sq < _NORM_FLOOR:
        raise DegenerateStateError("superposition norm vanished in the number basis")
    grid /= math.sqrt(norm_sq)
    rows = float(np.sum(np.abs(grid[-2:, :]) ** 2))
    cols = float(np.sum(np.abs(grid[:, -2:]) ** 2))
    corner = float(np.sum(np.abs(grid[-2:, -2:]) ** 2))
    tail = rows + cols - corner
    if tail > TAIL_TOLERANCE:
        raise TruncationTooSmallError(
            f"tail mass {tail:.3e} above tolerance {TAIL_TOLERANCE:.1e}; "
            f"raise trunc above {trunc}"
        )
    grid.flags.writeable = False
    return BipartiteAmplitudes(amps=grid, trunc=trunc, norm_sq=norm_sq)


def reduced_purity(state: BipartiteAmplitudes, mode: Mode = Mode.A) -> float:
    """Purity tr(rho^2) of one mode's reduced density matrix.

    With the amplitude grid A, the reduced matrix of mode A is
    ``A A^dag`` and of mode B is ``A^dag A``; either way the purity is the
    squared Frobenius norm of that product.  Equals 1 only for a product
    state, 1/2 for a maximally entangled two-branch state.
    """
    a = state.amps
    if mode is Mode.A:
        rho = a @ a.conj().T
    else:
        rho = a.conj().T @ a
    return float(np.vdot(rho, rho).real)


def concurrence_oracle(spec: StateSpec, trunc: int | None = None) -> ConcurrenceResult:
    """Concurrence by brute force: build, trace out, measure mixedness.

    For a pure two-mode state the concurrence is
    ``sqrt(2 (1 - tr(rho_A^2)))``.  Rounding may push the radicand a hair
    outside [0, 2]; excursions within 1e-12 are clamped, anything larger
    raises (that would be a bug, not noise).
    """
    state = build_state(spec, trunc)
    purity = reduced_purity(state, Mode.A)
    radicand = 2.0 * (1.0 - purity)
    if radicand < 0.0:
        if radicand < -1e-12:
            raise InternalConsistencyError(f"negative radicand {radicand!r}")
        radicand = 0.0
    value = math.sqrt(radicand)
    if value > 1.0:
        if value > 1.0 + 1e-12:
            raise InternalConsistencyError(f"concurrence {value!r} above 1")
        value = 1.0
    return ConcurrenceResult(value, EvalPath.DIRECT)
