"""The claims battery behind ``smeecs check``.

Every headline property the library stakes out — baseline limits, closed
form vs. brute force, normalization certificates, strong-field
saturation, curve shape, moment identities, zero-field limits — runs here
at its shipped tolerance.  The test suite executes the same battery (plus
finer-grained per-module tests); the CLI prints one PASS/FAIL line per
check.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .entanglement import (
    EvalPath,
    concurrence_closed,
    concurrence_m0,
    concurrence_small_alpha_limit,
)
from .errors import DegenerateStateError
from .fock_oracle import (
    build_state,
    concurrence_oracle,
    photon_added_amplitudes,
)
from .specfun import cross_moment, laguerre
from .states import Sign, StateSpec, normalization_N

import numpy as np

__all__ = ["CheckResult", "CHECK_NAMES", "CHECK_BUDGETS", "run_checks"]


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check.

    ``worst`` is the largest observed error (in whatever metric the check
    uses); ``tolerance`` what it was held against; ``seconds`` wall time.
    """

    name: str
    passed: bool
    worst: float
    tolerance: float
    seconds: float
    detail: str


# Grids shared by several checks.
_BASELINE_XS = tuple(i / 10.0 for i in range(1, 251))  # 0.1 .. 25.0
_ORACLE_XS = (0.25, 0.5, 1.0, 2.0, 4.0, 6.0)
_ORACLE_MS = tuple(range(6))
_STRONG_MS = (0, 1, 3, 5, 20)
_FIG1_MS = (0, 1, 3, 5, 20)  # even branch
_FIG2_MS = (0, 3, 5, 10, 20)  # odd branch
_MOMENT_XS = (0.25, 1.0, 2.5, 5.0, 7.5, 10.0)
_MOMENT_PAIRS = (
    (1.3 + 0.4j, 0.2 - 1.1j),
    (0.5 + 0.0j, -1.5 + 0.3j),
    (1.9 - 0.2j, 1.0 + 1.0j),
    (0.8j, -0.6 - 0.7j),
)


def _spec(x: float, m: int, sign: Sign) -> StateSpec:
    return StateSpec(alpha=math.sqrt(x), m=m, sign=sign)


def _check_odd_baseline(tol: float) -> tuple[bool, float, str]:
    worst = 0.0
    for x in _BASELINE_XS:
        worst = max(worst, abs(concurrence_closed(_spec(x, 0, Sign.MINUS)).value - 1.0))
    return worst <= tol, worst, f"odd m=0 state vs exact 1 on {len(_BASELINE_XS)} points"
def _check_even_baseline(tol: float) -> tuple[bool, float, str]:
    worst = 0.0
    for x in _BASELINE_XS:
        expected = -math.expm1(-4.0 * x) / (1.0 + math.exp(-4.0 * x))
        worst = max(worst, abs(concurrence_closed(_spec(x, 0, Sign.PLUS)).value - expected))
    return worst <= tol, worst, "even m=0 state vs its explicit formula"


def _check_oracle_match(tol: float) -> tuple[bool, float, str]:
    worst = 0.0
    for m in _ORACLE_MS:
        for x in _ORACLE_XS:
            for sign in Sign:
                closed = concurrence_closed(_spec(x, m, sign)).value
                oracle = concurrence_oracle(_spec(x, m, sign)).value
                worst = max(worst, abs(closed - oracle))
    n = len(_ORACLE_MS) * len(_ORACLE_XS) * 2
    return worst <= tol, worst, f"closed form vs number-basis brute force on {n} states"


def _check_norm_certificate(tol: float) -> tuple[bool, float, str]:
    worst = 0.0
    for m in _ORACLE_MS:
        for x in _ORACLE_XS:
            for sign in Sign:
                spec = _spec(x, m, sign)
                brute = build_state(spec).norm_sq
                closed = normalization_N(spec) ** -2.0
                worst = max(worst, abs(brute - closed) / closed)
    return worst <= tol, worst, "brute-force <state|state> vs closed normalization"


def _check_strong_field(tol: float) -> tuple[bool, float, str]:
    worst = 0.0
    ok = True
    for m in _STRONG_MS:
        for sign in Sign:
            near = concurrence_closed(_spec(20.0, m, sign))
            far = concurrence_closed(_spec(100.0, m, sign))
            ok = ok and near.value > 0.999 and far.path is EvalPath.SIGNED_LOG
            worst = max(worst, 1.0 - far.value)
    return ok and worst <= tol, worst, (
        "C > 0.999 at x=20 and 1 - C below tolerance at x=100 (signed-log path)"
    )


def _check_figure_shape(tol: float) -> tuple[bool, float, str]:
    worst = -math.inf
    for sign, m_list in ((Sign.PLUS, _FIG1_MS), (Sign.MINUS, _FIG2_MS)):
        start = 0 if sign is Sign.PLUS else 1  # odd state undefined at x = 0
        for m in m_list:
            xs = [i / 10.0 for i in range(start, 61)]
            values = [concurrence_closed(_spec(x, m, sign)).value for x in xs]
            for a, b in zip(values, values[1:]):
                worst = max(worst, a - b)  # positive means a decrease
    return worst <= tol, max(worst, 0.0), (
        "no decrease beyond tolerance along either family of curves"
    )


def _check_moment_identities(tol: float) -> tuple[bool, float, str]:
    worst = 0.0
    for m in range(11):
        fact = float(math.factorial(m))
        for x in _MOMENT_XS:
            a = math.sqrt(x)
            same = cross_moment(m, m, a, a)
            expect_same = fact * laguerre(m, -x)
            worst = max(worst, abs(same - expect_same) / expect_same)
            opposite = cross_moment(m, m, a, -a)
            expect_opp = fact * math.exp(-2.0 * x) * laguerre(m, x)
            scale = max(abs(expect_opp), fact * math.exp(-2.0 * x))
            worst = max(worst, abs(opposite - expect_opp) / scale)
    # General (n, m) against a plain number-basis sum, trunc 128.
    fock_worst = 0.0
    for alpha, beta in _MOMENT_PAIRS:
        for n in range(7):
            for m in range(7):
                bra = photon_added_amplitudes(alpha, n, 128)
                ket = photon_added_amplitudes(beta, m, 128)
                brute = complex(np.vdot(bra, ket))
                direct = cross_moment(n, m, alpha, beta)
                scale = max(abs(brute), abs(direct), 1e-30)
                fock_worst = max(fock_worst, abs(direct - brute) / scale)
    passed = worst <= tol and fock_worst <= 1e-8
    return passed, worst, (
        f"Laguerre reductions (rel {worst:.2e}) and number-basis sums "
        f"(rel {fock_worst:.2e}, fixed 1e-08)"
    )


def _richardson_zero_field(m: int) -> float:
    """Extrapolate the odd-state concurrence to x -> 0 from brute force."""
    h = 1e-3
    c4, c2, c1 = (
        concurrence_oracle(_spec(s * h, m, Sign.MINUS)).value for s in (4, 2, 1)
    )
    first_a = 2.0 * c2 - c4  # kills the O(x) term at step 2h
    first_b = 2.0 * c1 - c2  # ... at step h
    return (4.0 * first_b - first_a) / 3.0  # kills the O(x^2) remainder


def _check_zero_field_limit(tol: float) -> tuple[bool, float, str]:
    worst = 0.0
    for m in (1, 3, 5):
        extrapolated = _richardson_zero_field(m)
        closed_near = concurrence_closed(_spec(1e-6, m, Sign.MINUS)).value
        formula = concurrence_small_alpha_limit(m, Sign.MINUS)
        worst = max(worst, abs(closed_near - extrapolated), abs(formula - extrapolated))
    return worst <= tol, worst, (
        "closed form at x=1e-6 and the limit expression vs Richardson-"
        "extrapolated brute force"
    )


# name -> (function, default tolerance, wall-time budget in seconds)
_REGISTRY: dict[str, tuple[Callable[[float], tuple[bool, float, str]], float, float]] = {
    "odd-baseline": (_check_odd_baseline, 1e-12, 1.0),
    "even-baseline": (_check_even_baseline, 1e-12, 1.0),
    "oracle-match": (_check_oracle_match, 1e-8, 10.0),
    "norm-certificate": (_check_norm_certificate, 1e-8, 10.0),
    "strong-field": (_check_strong_field, 1e-6, 1.0),
    "figure-shape": (_check_figure_shape, 1e-9, 5.0),
    "moment-identities": (_check_moment_identities, 1e-10, 5.0),
    "zero-field-limit": (_check_zero_field_limit, 1e-4, 5.0),
}

CHECK_NAMES = tuple(_REGISTRY)
CHECK_BUDGETS = {name: budget for name, (_, _, budget) in _REGISTRY.items()}


def run_checks(
    names: Iterable[str] | None = None,
    tolerances: Mapping[str, float] | None = None,
) -> list[CheckResult]:
    """Run the battery (or a named subset) and collect results.

    Parameters
    ----------
    names : iterable of str, optional
        Subset to run, in registry order; default all.  Unknown names
        raise KeyError.
    tolerances : mapping, optional
        Per-check tolerance overrides.

    Returns
    -------
    list of CheckResult
    """
    selected = tuple(names) if names is not None else CHECK_NAMES
    for name in selected:
        if name not in _REGISTRY:
            raise KeyError(f"unknown check {name!r}; known: {', '.join(CHECK_NAMES)}")
    overrides = dict(tolerances or {})
    results = []
    for name in CHECK_NAMES:
        if name not in selected:
            continue
        func, default_tol, _budget = _REGISTRY[name]
        tol = float(overrides.get(name, default_tol))
        started = time.perf_counter()
        passed, worst, detail = func(tol)
        elapsed = time.perf_counter() - started
        results.append(
            CheckResult(
                name=name,
                passed=passed,
                worst=worst,
                tolerance=tol,
                seconds=elapsed,
                detail=detail,
            )
        )
    return results
