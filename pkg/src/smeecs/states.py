"""State descriptors, normalization constants and branch overlaps.

The states in question are two-mode superpositions of coherent branches
``|alpha, alpha>`` and ``|-alpha, -alpha>`` (relative sign + or -) with
``m`` extra quanta created in the first mode.  Everything measurable about
their entanglement reduces to ``x = |alpha|^2``, the excitation number
``m`` and the branch sign; phases of ``alpha`` drop out identically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DegenerateStateError
from .specfun import (
    ONE,
    SignedLogValue,
    laguerre,
    laguerre_even_odd,
    laguerre_signed_log,
    log_factorial,
)

__all__ = [
    "Sign",
    "StateSpec",
    "OverlapPair",
    "LOG_DOMAIN_FIELD_THRESHOLD",
    "LOG_DOMAIN_ORDER_THRESHOLD",
    "normalization_N",
    "normalization_M",
    "overlap_p1",
    "overlap_p2",
    "overlap_p2_signed_log",
    "overlaps",
]

# Above this field intensity x = |alpha|^2 the exp(-4x) suppression factors
# leave comfortable double range once multiplied by Laguerre growth; the
# signed-log path takes over there.  Excitation orders past the second cap
# route the same way (their factorials stop fitting in a float).
LOG_DOMAIN_FIELD_THRESHOLD = 80.0
LOG_DOMAIN_ORDER_THRESHOLD = 150

# A normalization bracket this far (relatively) below its leading term is
# numerically indistinguishable from an exactly vanishing state.
_DEGENERACY_RTOL = 1e-14
_LOG_DEGENERACY_RTOL = math.log(_DEGENERACY_RTOL)

_LN2 = math.log(2.0)


class Sign(Enum):
    """Relative sign between the two coherent branches."""

    PLUS = "+"
    MINUS = "-"


@dataclass(frozen=True)
class StateSpec:
    """Parameters of one photon-excited entangled coherent state.

    Attributes
    ----------
    alpha : complex
        Coherent amplitude of each branch (mode-symmetric).
    m : int
        Number of quanta added to the first mode, >= 0.
    sign : Sign
        Relative sign of the two branches.
    """

    alpha: complex
    m: int
    sign: Sign

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("excitation number m must be >= 0")
        if not isinstance(self.sign, Sign):
            raise TypeError("sign must be a Sign member")
        object.__setattr__(self, "alpha", complex(self.alpha))

    @property
    def x(self) -> float:
        """Field intensity |alpha|^2 — the only way alpha enters any result."""
        return abs(self.alpha) ** 2

    @property
    def degenerate(self) -> bool:
        """True when the superposition is identically the zero vector."""
        return self.alpha == 0 and self.sign is Sign.MINUS


@dataclass(frozen=True)
class OverlapPair:
    """The two scalar overlaps that fix the concurrence.

    ``p1`` is the overlap between the photon-added branch states of the
    excited mode, ``p2`` the bare coherent overlap <alpha|-alpha> of the
    spectator mode.  Both are real with |p| <= 1; p1 can be negative.
    """

    p1: float
    p2: float


def _use_log_domain(x: float, m: int) -> bool:
    return x > LOG_DOMAIN_FIELD_THRESHOLD or m > LOG_DOMAIN_ORDER_THRESHOLD


def _tail_combine(
    even: float, odd: float, lpos: float, x: float, plus: bool, rate: float
) -> float:
    """L_m(-x) +/- exp(-rate*x) L_m(x) for x >= 0, free of cancellation.

    ``even``/``odd`` are the nonnegative partial sums of L_m(-x) from
    :func:`smeecs.specfun.laguerre_even_odd`, ``lpos`` is L_m(x).  Each
    branch below is a sum of two nonnegative terms: depending on the signs
    involved, the identity ``L_m(-x) -/+ L_m(x) = 2*odd / 2*even`` absorbs
    the cancelling parts exactly.
    """
    if plus:
        if lpos >= 0.0:
            return (even + odd) + math.exp(-rate * x) * lpos
        return 2.0 * even + math.expm1(-rate * x) * lpos
    if lpos <= 0.0:
        return (even + odd) - math.exp(-rate * x) * lpos
    return 2.0 * odd - math.expm1(-rate * x) * lpos


def _direct_bracket(m: int, x: float, plus: bool) -> tuple[float, float]:
    """Normalization bracket L_m(-x) +/- exp(-4x) L_m(x) and L_m(-x) itself."""
    even, odd = laguerre_even_odd(m, x)
    lpos = laguerre(m, x)
    return _tail_combine(even, odd, lpos, x, plus, 4.0), even + odd


def _sl_bracket(m: int, x: float, plus: bool) -> tuple[SignedLogValue, SignedLogValue]:
    """Signed-log bracket and L_m(-x) for the strong-field path."""
    lneg = laguerre_signed_log(m, -x)
    lpos = laguerre_signed_log(m, x)
    tail = SignedLogValue(1, -4.0 * x) * lpos
    bracket = lneg + tail if plus else lneg - tail
    return bracket, lneg


def _bracket_or_raise(m: int, x: float, plus: bool) -> tuple[float, float]:
    """(log of bracket, log of L_m(-x)); raises on a degenerate bracket."""
    if _use_log_domain(x, m):
        bracket, lneg = _sl_bracket(m, x, plus)
        if bracket.sign <= 0 or bracket.log_mag - lneg.log_mag < _LOG_DEGENERACY_RTOL:
            raise DegenerateStateError(
                "normalization bracket vanishes; the superposition is the zero vector"
            )
        return bracket.log_mag, lneg.log_mag
    bracket, lneg = _direct_bracket(m, x, plus)
    if bracket <= _DEGENERACY_RTOL * lneg:
        raise DegenerateStateError(
            "normalization bracket vanishes; the superposition is the zero vector"
        )
    return math.log(bracket), math.log(lneg)


def normalization_N(spec: StateSpec) -> float:
    """Normalization constant of the bare excited superposition.

    ``N`` is defined by ``N^-2 = 2 m! [L_m(-x) +/- exp(-4x) L_m(x)]`` with
    ``x = |alpha|^2``; multiplying the un-normalized state
    ``(a^dag)^m (|alpha,alpha> +/- |-alpha,-alpha>)`` by N gives a unit
    vector.  Evaluated through logs, so large m and strong fields do not
    overflow the factorial or the bracket.

    Raises
    ------
    DegenerateStateError
        If the bracket vanishes (the odd superposition at alpha = 0, or a
        numerically indistinguishable neighborhood of it).
    """
    log_bracket, _ = _bracket_or_raise(spec.m, spec.x, spec.sign is Sign.PLUS)
    return math.exp(-0.5 * (_LN2 + log_factorial(spec.m) + log_bracket))


def normalization_M(spec: StateSpec) -> float:
    """Normalization constant of the photon-added-branch decomposition.

    Writing the state over normalized photon-added branches instead of the
    bare ones pulls the branch norm ``m! L_m(-x)`` out of each term,
    leaving ``M^2 = L_m(-x) / (2 [L_m(-x) +/- exp(-4x) L_m(x)])``.  Same
    degeneracy behavior as :func:`normalization_N`.
    """
    log_bracket, log_lneg = _bracket_or_raise(spec.m, spec.x, spec.sign is Sign.PLUS)
    return math.exp(0.5 * (log_lneg - _LN2 - log_bracket))


def overlap_p1(alpha: complex, m: int) -> float:
    """Overlap of the two photon-added branch states of the excited mode.

    ``p1 = exp(-2x) L_m(x) / L_m(-x)`` with ``x = |alpha|^2``; this is
    <alpha, m|-alpha, m> for normalized photon-added coherent states.  Lies
    in [-1, 1] and can genuinely be negative or zero (it vanishes at the
    positive Laguerre roots, e.g. m = 1, x = 1).  Strong fields route
    through the signed-log path and simply underflow to 0.0.
    """
    if m < 0:
        raise ValueError("excitation number m must be >= 0")
    x = abs(complex(alpha)) ** 2
    if _use_log_domain(x, m):
        lneg = laguerre_signed_log(m, -x)
        lpos = laguerre_signed_log(m, x)
        return (SignedLogValue(1, -2.0 * x) * lpos / lneg).to_real()
    return math.exp(-2.0 * x) * laguerre(m, x) / laguerre(m, -x)


def overlap_p2(alpha: complex) -> float:
    """Spectator-mode coherent overlap <alpha|-alpha> = exp(-2|alpha|^2).

    Underflows to 0.0 for |alpha|^2 beyond ~354; use
    :func:`overlap_p2_signed_log` when the log is what matters.
    """
    return math.exp(-2.0 * abs(complex(alpha)) ** 2)


def overlap_p2_signed_log(alpha: complex) -> SignedLogValue:
    """Same overlap as :func:`overlap_p2`, kept in the log domain."""
    x = abs(complex(alpha)) ** 2
    if x == 0.0:
        return ONE
    return SignedLogValue(1, -2.0 * x)


def overlaps(spec: StateSpec) -> OverlapPair:
    """Both overlaps of a state, ready for the two-component concurrence."""
    return OverlapPair(p1=overlap_p1(spec.alpha, spec.m), p2=overlap_p2(spec.alpha))
