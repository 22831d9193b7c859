"""Special functions for photon-excited entangled coherent states.

Everything the closed-form concurrence needs lives here: Laguerre
polynomials (plain and log-domain), the two-variable Hermite polynomials
that encode normally ordered products of mode operators, and the
coherent-state matrix elements built from them.  All functions are pure;
the module keeps no mutable state.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

__all__ = [
    "SignedLogValue",
    "laguerre",
    "laguerre_even_odd",
    "laguerre_signed_log",
    "hermite2",
    "cross_moment",
    "log_factorial",
]

# n! is exactly representable as a float only up to 170!; beyond that the
# log-domain table takes over.
_DIRECT_FACTORIAL_CAP = 170

_LOG_FACTORIAL_TABLE = tuple(math.lgamma(n + 1) for n in range(_DIRECT_FACTORIAL_CAP + 1))

# Rescaling constant for the log-domain Laguerre recurrence.  A power of
# two, so multiplying by it never rounds and the scaled recurrence tracks
# the plain one bit for bit.
_RESCALE = 2.0 ** -512
_LOG_RESCALE = 512.0 * math.log(2.0)
_RESCALE_TRIGGER = 2.0 ** 512

# Magnitudes this far below the largest intermediate are treated as exact
# zeros of the recurrence (the value has been consumed by cancellation).
_LOG_ZERO_CUTOFF = math.log(1e-300)


def log_factorial(n: int) -> float:
    """ln(n!) for nonnegative integer n, exact in the tabulated range."""
    if n < 0:
        raise ValueError("factorial of a negative integer")
    if n <= _DIRECT_FACTORIAL_CAP:
        return _LOG_FACTORIAL_TABLE[n]
    return math.lgamma(n + 1)


@dataclass(frozen=True)
class SignedLogValue:
    """A real number carried as ``sign * exp(log_mag)``.

    Parameters
    ----------
    sign : int
        -1, 0, or +1.  Zero means the value is exactly zero and
        ``log_mag`` is meaningless (kept at ``-inf`` by convention).
    log_mag : float
        Natural log of the magnitude.

    Notes
    -----
    This is the currency of the strong-field evaluation path, where
    factors like ``exp(-4|alpha|^2)`` and Laguerre growth individually
    leave double range but their combinations stay tame.  Addition is a
    signed log-sum-exp; all operations are exact on the sign and accurate
    to a few ulps on the log.
    """

    sign: int
    log_mag: float

    @classmethod
    def from_real(cls, value: float) -> "SignedLogValue":
        if value == 0.0:
            return ZERO
        if value != value:
            raise ValueError("cannot represent NaN")
        return cls(1 if value > 0.0 else -1, math.log(abs(value)))

    def to_real(self) -> float:
        """Materialize to a float; saturates to +-inf / 0.0 out of range."""
        if self.sign == 0:
            return 0.0
        try:
            mag = math.exp(self.log_mag)
        except OverflowError:
            mag = math.inf
        return mag if self.sign > 0 else -mag

    def __neg__(self) -> "SignedLogValue":
        return SignedLogValue(-self.sign, self.log_mag)

    def __mul__(self, other: "SignedLogValue") -> "SignedLogValue":
        s = self.sign * other.sign
        if s == 0:
            return ZERO
        return SignedLogValue(s, self.log_mag + other.log_mag)

    def __truediv__(self, other: "SignedLogValue") -> "SignedLogValue":
        if other.sign == 0:
            raise ZeroDivisionError("division by a zero SignedLogValue")
        if self.sign == 0:
            return ZERO
        return SignedLogValue(self.sign * other.sign, self.log_mag - other.log_mag)

    def __add__(self, other: "SignedLogValue") -> "SignedLogValue":
        if self.sign == 0:
            return other
        if other.sign == 0:
            return self
        if self.log_mag >= other.log_mag:
            hi, lo = self, other
        else:
            hi, lo = other, self
        ratio = math.exp(lo.log_mag - hi.log_mag)  # in [0, 1]
        if self.sign == other.sign:
            return SignedLogValue(hi.sign, hi.log_mag + math.log1p(ratio))
        if ratio == 1.0:
            return ZERO
        return SignedLogValue(hi.sign, hi.log_mag + math.log1p(-ratio))

    def __sub__(self, other: "SignedLogValue") -> "SignedLogValue":
        return self + (-other)

    def sqrt(self) -> "SignedLogValue":
        if self.sign < 0:
            raise ValueError("sqrt of a negative SignedLogValue")
        if self.sign == 0:
            return ZERO
        return SignedLogValue(1, 0.5 * self.log_mag)


ZERO = SignedLogValue(0, -math.inf)
ONE = SignedLogValue(1, 0.0)


def laguerre(m: int, x: float) -> float:
    """Laguerre polynomial L_m(x) by the ascending three-term recurrence.

    Parameters
    ----------
    m : int
        Order, >= 0.
    x : float
        Argument; any finite real.

    Returns
    -------
    float
        L_m(x).

    Notes
    -----
    Uses ``(l+1) L_{l+1} = (2l+1-x) L_l - l L_{l-1}`` seeded with
    ``L_0 = 1``, ``L_1 = 1 - x``.  The recurrence is benign on both sides:
    for x < 0 every value is positive and growing, and in the oscillatory
    region x > 0 it avoids the catastrophic cancellation of the defining
    alternating sum.
    """
    if m < 0:
        raise ValueError("Laguerre order must be >= 0")
    if m == 0:
        return 1.0
    prev, cur = 1.0, 1.0 - x
    for l in range(1, m):
        prev, cur = cur, ((2 * l + 1 - x) * cur - l * prev) / (l + 1)
    return cur


def laguerre_even_odd(m: int, x: float) -> tuple[float, float]:
    """Split L_m(-x), x >= 0, into its even- and odd-degree partial sums.

    Returns ``(even, odd)`` with ``even + odd = L_m(-x)`` and
    ``even - odd = L_m(x)`` in exact arithmetic.  Every term of either sum
    is nonnegative, which is what lets downstream code assemble
    combinations like ``L_m(-x) - exp(-2x) L_m(x)`` without cancellation.
    """
    if m < 0:
        raise ValueError("Laguerre order must be >= 0")
    if x < 0.0:
        raise ValueError("even/odd split defined for x >= 0")
    even = 1.0  # l = 0 term
    odd = 0.0
    term = 1.0  # binom(m, l) x^l / l!
    for l in range(m):
        term *= x * (m - l) / ((l + 1) * (l + 1))
        if (l + 1) % 2:
            odd += term
        else:
            even += term
    return even, odd


def laguerre_signed_log(m: int, x: float) -> SignedLogValue:
    """L_m(x) as a :class:`SignedLogValue`, usable far outside double range.

    Parameters
    ----------
    m : int
        Order, >= 0.
    x : float
        Argument.

    Returns
    -------
    SignedLogValue
        Sign and log-magnitude of L_m(x).  Sign 0 is reported when the
        value is an exact zero of the polynomial or indistinguishable from
        one (more than ~300 decades below the largest intermediate).

    Notes
    -----
    For x <= 0 every term of the defining sum is positive, so the result
    is a log-sum-exp over term logarithms built from tabulated
    log-factorials; this path has no conditioning problem at any (m, x).
    For x > 0 a plain sum is ill-conditioned, so the three-term recurrence
    of :func:`laguerre` runs instead, carrying an explicit power-of-two
    scale factor so intermediate growth cannot overflow.  Within double
    range this reproduces :func:`laguerre` bit for bit.
    """
    if m < 0:
        raise ValueError("Laguerre order must be >= 0")
    if m == 0 or x == 0.0:
        return ONE
    if x < 0.0:
        ax = -x
        log_ax = math.log(ax)
        log_m_fact = log_factorial(m)
        logs = [
            log_m_fact - log_factorial(l) - log_factorial(m - l)
            - log_factorial(l) + l * log_ax
            for l in range(m + 1)
        ]
        hi = max(logs)
        acc = math.fsum(math.exp(t - hi) for t in logs)
        return SignedLogValue(1, hi + math.log(acc))

    # x > 0: scaled recurrence.
    prev, cur = 1.0, 1.0 - x
    shift = 0.0
    peak = math.log(max(1.0, abs(cur)))  # log of the largest magnitude seen
    for l in range(1, m):
        prev, cur = cur, ((2 * l + 1 - x) * cur - l * prev) / (l + 1)
        mag = max(abs(prev), abs(cur))
        if mag > _RESCALE_TRIGGER:
            prev *= _RESCALE
            cur *= _RESCALE
            shift += _LOG_RESCALE
            mag *= _RESCALE
        if mag > 0.0:
            peak = max(peak, shift + math.log(mag))
    if cur == 0.0:
        return ZERO
    log_mag = shift + math.log(abs(cur))
    if log_mag - peak < _LOG_ZERO_CUTOFF:
        return ZERO
    return SignedLogValue(1 if cur > 0.0 else -1, log_mag)


def hermite2(m: int, n: int, eta: complex, eta_tilde: complex) -> complex:
    """Two-variable Hermite polynomial H_{m,n}(eta, eta_tilde).

    Parameters
    ----------
    m, n : int
        Nonnegative indices.
    eta, eta_tilde : complex
        The two arguments.  They are independent: the normal-ordering
        identity instantiates them at values that are *not* conjugates of
        each other, so no conjugation happens here.

    Returns
    -------
    complex
        ``sum_l (-1)^l binom(m,l) binom(n,l) l! eta^(m-l) eta_tilde^(n-l)``
        over ``l = 0 .. min(m, n)``, with exact integer coefficients.
    """
    if m < 0 or n < 0:
        raise ValueError("Hermite indices must be >= 0")
    eta = complex(eta)
    eta_tilde = complex(eta_tilde)
    total = 0j
    for l in range(min(m, n) + 1):
        coeff = (-1) ** l * math.comb(m, l) * math.comb(n, l) * math.factorial(l)
        total += coeff * eta ** (m - l) * eta_tilde ** (n - l)
    return total


# (-i)^k for k mod 4; exact, unlike complex.__pow__.
_NEG_I_POWERS = (1 + 0j, -1j, -1 + 0j, 1j)


def cross_moment(n: int, m: int, alpha: complex, beta: complex) -> complex:
    """Coherent-state matrix element <alpha| a^n (a^dag)^m |beta>.

    Normal ordering turns ``a^n (a^dag)^m`` into a two-variable Hermite
    polynomial of the mode operators up to a power of ``-i``; between
    coherent states the operators collapse onto their eigenvalues and the
    bare overlap <alpha|beta> multiplies in.

    Parameters
    ----------
    n, m : int
        Number of annihilators / creators, both >= 0.
    alpha, beta : complex
        Coherent amplitudes of bra and ket.

    Returns
    -------
    complex
        The matrix element.  Equal-amplitude and opposite-amplitude
        diagonals reduce to Laguerre polynomials: ``cross_moment(m, m,
        a, a) = m! L_m(-|a|^2)`` and ``cross_moment(m, m, a, -a) =
        m! exp(-2|a|^2) L_m(|a|^2)``.
    """
    if n < 0 or m < 0:
        raise ValueError("operator powers must be >= 0")
    alpha = complex(alpha)
    beta = complex(beta)
    h = hermite2(m, n, 1j * alpha.conjugate(), 1j * beta)
    phase = _NEG_I_POWERS[(n + m) % 4]
    overlap = cmath.exp(
        alpha.conjugate() * beta - 0.5 * (abs(alpha) ** 2 + abs(beta) ** 2)
    )
    return phase * h * overlap
