"""Concurrence of photon-excited entangled coherent states.

Two independent expressions live here: the generic two-overlap formula
(``concurrence_general``, which works for any state of the
two-nonorthogonal-branch form) and the closed form specialized to these
states (``concurrence_closed``).  They agree identically in exact
arithmetic; the closed form is organized so that it also holds up
numerically at both ends — deep cancellation near zero field, and factors
far outside double range at strong field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DegenerateStateError, InternalConsistencyError
from .specfun import SignedLogValue, laguerre, laguerre_even_odd, laguerre_signed_log
from .states import (
    OverlapPair,
    Sign,
    StateSpec,
    _DEGENERACY_RTOL,
    _LOG_DEGENERACY_RTOL,
    _tail_combine,
    _use_log_domain,
)

__all__ = [
    "EvalPath",
    "ConcurrenceResult",
    "concurrence_general",
    "concurrence_closed",
    "concurrence_m0",
    "concurrence_small_alpha_limit",
]

# How far a computed concurrence may poke outside [0, 1] before it is a
# bug rather than rounding.
_UNIT_SLACK = 1e-12


class EvalPath(Enum):
    """Which arithmetic produced a concurrence value."""

    DIRECT = "direct"
    SIGNED_LOG = "signed_log"
    LIMIT_FORMULA = "limit_formula"


@dataclass(frozen=True)
class ConcurrenceResult:
    """A concurrence value plus provenance.

    Attributes
    ----------
    value : float
        The concurrence, in [0, 1].
    path : EvalPath
        Which evaluation route produced it.
    """

    value: float
    path: EvalPath


def _clamp_unit(value: float) -> float:
    if value < 0.0:
        if value >= -_UNIT_SLACK:
            return 0.0
        raise InternalConsistencyError(f"concurrence {value!r} below 0 beyond slack")
    if value > 1.0:
        if value <= 1.0 + _UNIT_SLACK:
            return 1.0
        raise InternalConsistencyError(f"concurrence {value!r} above 1 beyond slack")
    return value


def concurrence_general(p: OverlapPair, sign: Sign) -> ConcurrenceResult:
    """Concurrence of a two-branch state from its two overlaps alone.

    For a superposition of product branches with real mode overlaps
    ``p1`` (excited mode) and ``p2`` (spectator mode),

        C = sqrt((1 - p1^2)(1 - p2^2)) / (1 +/- p1 p2),

    with the + for the even and - for the odd branch combination.  The
    ``1 - p^2`` factors are computed as ``(1 - p)(1 + p)``, which is exact
    where it matters (p near 1).

    Raises
    ------
    DegenerateStateError
        For the odd combination when ``1 - p1 p2`` is below rounding level,
        i.e. both overlaps are 1 and the two branches coincide.
    """
    p1, p2 = p.p1, p.p2
    if abs(p1) > 1.0 or not 0.0 <= p2 <= 1.0:
        raise ValueError("overlaps must satisfy |p1| <= 1 and 0 <= p2 <= 1")
    numerator = math.sqrt((1.0 - p1) * (1.0 + p1) * (1.0 - p2) * (1.0 + p2))
    if sign is Sign.PLUS:
        denominator = 1.0 + p1 * p2
    else:
        denominator = 1.0 - p1 * p2
        if denominator <= _DEGENERACY_RTOL:
            raise DegenerateStateError(
                "branches coincide (p1 = p2 = 1); the odd state vanishes"
            )
    return ConcurrenceResult(_clamp_unit(numerator / denominator), EvalPath.DIRECT)


def _closed_direct(m: int, x: float, plus: bool) -> float:
    even, odd = laguerre_even_odd(m, x)
    lpos = laguerre(m, x)
    lneg = even + odd
    # A = L(-x)^2 - e^{-4x} L(x)^2 factors into two cancellation-free halves.
    g = _tail_combine(even, odd, lpos, x, plus=False, rate=2.0)
    h = _tail_combine(even, odd, lpos, x, plus=True, rate=2.0)
    b = -math.expm1(-4.0 * x)  # 1 - e^{-4x}
    d = _tail_combine(even, odd, lpos, x, plus=plus, rate=4.0)
    if d <= _DEGENERACY_RTOL * lneg:
        raise DegenerateStateError(
            "normalization bracket vanishes; the superposition is the zero vector"
        )
    return math.sqrt(g * h * b) / d


def _closed_signed_log(m: int, x: float, plus: bool) -> float:
    lneg = laguerre_signed_log(m, -x)
    lpos = laguerre_signed_log(m, x)
    e2 = SignedLogValue(1, -2.0 * x)
    e4 = SignedLogValue(1, -4.0 * x)
    g = lneg - e2 * lpos
    h = lneg + e2 * lpos
    b = SignedLogValue(1, math.log1p(-math.exp(-4.0 * x)))
    tail = e4 * lpos
    d = lneg + tail if plus else lneg - tail
    if d.sign <= 0 or d.log_mag - lneg.log_mag < _LOG_DEGENERACY_RTOL:
        raise DegenerateStateError(
            "normalization bracket vanishes; the superposition is the zero vector"
        )
    if g.sign < 0 or h.sign < 0:
        raise InternalConsistencyError("squared-difference factor came out negative")
    return ((g * h * b).sqrt() / d).to_real()


def concurrence_closed(spec: StateSpec) -> ConcurrenceResult:
    """Closed-form concurrence of a photon-excited entangled coherent state.

    Evaluates, with ``x = |alpha|^2`` and L the Laguerre polynomials,

        C = sqrt((L_m(-x)^2 - e^{-4x} L_m(x)^2)(1 - e^{-4x}))
            / (L_m(-x) +/- e^{-4x} L_m(x)),

    which is exactly :func:`concurrence_general` fed with the overlaps of
    this state family.  The numerator difference is factored into
    ``(L_m(-x) - e^{-2x} L_m(x))(L_m(-x) + e^{-2x} L_m(x))`` and each
    factor assembled from nonnegative terms, so small-field values hold to
    full precision; beyond the field/order thresholds the same expression
    runs in signed-log arithmetic (``path = SIGNED_LOG``).

    Raises
    ------
    DegenerateStateError
        When the normalization bracket vanishes — the odd state at (or
        numerically at) alpha = 0.
    """
    m, x = spec.m, spec.x
    plus = spec.sign is Sign.PLUS
    if _use_log_domain(x, m):
        return ConcurrenceResult(
            _clamp_unit(_closed_signed_log(m, x, plus)), EvalPath.SIGNED_LOG
        )
    return ConcurrenceResult(_clamp_unit(_closed_direct(m, x, plus)), EvalPath.DIRECT)


def concurrence_m0(sign: Sign, alpha: complex) -> ConcurrenceResult:
    """Concurrence of the unexcited (m = 0) entangled coherent state.

    The odd state is maximally entangled for every nonzero alpha
    (``C = 1``); the even state gives
    ``C = (1 - e^{-4x}) / (1 + e^{-4x})``, rising from 0 at zero field to
    1 at strong field.

    Raises
    ------
    DegenerateStateError
        For the odd state at alpha = 0, where no state exists.
    """
    x = abs(complex(alpha)) ** 2
    if sign is Sign.MINUS:
        if x == 0.0:
            raise DegenerateStateError("odd state vanishes at alpha = 0")
        return ConcurrenceResult(1.0, EvalPath.LIMIT_FORMULA)
    value = -math.expm1(-4.0 * x) / (1.0 + math.exp(-4.0 * x))
    return ConcurrenceResult(_clamp_unit(value), EvalPath.LIMIT_FORMULA)


def concurrence_small_alpha_limit(m: int, sign: Sign) -> float:
    """Zero-field limit of the concurrence at fixed excitation m.

    The even branch loses all entanglement (limit 0).  The odd branch
    tends to ``2 sqrt(1 + m) / (2 + m)``: 1 at m = 0, then decreasing —
    e.g. 0.8 at m = 3 — approaching 0 like ``2/sqrt(m)`` for large m.
    The test suite certifies this expression against Richardson-
    extrapolated brute-force values before trusting it.
    """
    if m < 0:
        raise ValueError("excitation number m must be >= 0")
    if sign is Sign.PLUS:
        return 0.0
    return 2.0 * math.sqrt(1.0 + m) / (2.0 + m)
