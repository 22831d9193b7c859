"""Ship gate: one test per headline acceptance criterion.

Each test runs the same named check the CLI exposes (``smeecs check``),
prints its PASS/FAIL line (visible under ``pytest -s``), pins the
shipped tolerance, and asserts the wall-time budget.  Where a criterion
has a cheap independent restatement, it is re-asserted here directly so
this module is not a pure pass-through of the battery.
"""

import math

import pytest

from smeecs.checks import CHECK_BUDGETS, run_checks
from smeecs.entanglement import (
    EvalPath,
    concurrence_closed,
    concurrence_small_alpha_limit,
)
from smeecs.fock_oracle import build_state, concurrence_oracle
from smeecs.states import Sign, StateSpec, normalization_N


def run_criterion(name, pinned_tolerance):
    result = run_checks([name])[0]
    status = "PASS" if result.passed else "FAIL"
    print(
        f"{status} {result.name}: worst {result.worst:.3e} vs tol "
        f"{result.tolerance:.1e} in {result.seconds:.2f}s"
    )
    assert result.tolerance == pinned_tolerance
    assert result.seconds < CHECK_BUDGETS[name]
    assert result.passed, f"{result.name}: {result.detail} (worst {result.worst:.3e})"
    return result


def spec_of(x, m, sign):
    return StateSpec(alpha=math.sqrt(x), m=m, sign=sign)


def test_criterion_1_odd_baseline_is_maximal():
    """C = 1 for the unexcited odd state across 0.1 <= x <= 25."""
    result = run_criterion("odd-baseline", 1e-12)
    assert result.worst <= 1e-12
    assert concurrence_closed(spec_of(7.3, 0, Sign.MINUS)).value == pytest.approx(
        1.0, abs=1e-12
    )


def test_criterion_2_even_baseline_formula():
    """C = (1 - e^{-4x}) / (1 + e^{-4x}) for the unexcited even state."""
    run_criterion("even-baseline", 1e-12)
    x = 1.0
    direct = concurrence_closed(spec_of(x, 0, Sign.PLUS)).value
    assert direct == pytest.approx(
        -math.expm1(-4.0 * x) / (1.0 + math.exp(-4.0 * x)), abs=1e-12
    )


def test_criterion_3_closed_form_matches_brute_force():
    """|closed - oracle| < 1e-8 over m <= 5, x <= 6, both signs."""
    run_criterion("oracle-match", 1e-8)
    spot = spec_of(4.0, 5, Sign.MINUS)
    assert abs(
        concurrence_closed(spot).value - concurrence_oracle(spot).value
    ) < 1e-8


def test_criterion_4_normalization_certificate():
    """Brute-force <state|state> equals the closed normalization."""
    run_criterion("norm-certificate", 1e-8)
    spot = spec_of(2.0, 3, Sign.PLUS)
    assert build_state(spot).norm_sq == pytest.approx(
        normalization_N(spot) ** -2.0, rel=1e-8
    )


def test_criterion_5_strong_field_saturation():
    """C > 0.999 at x = 20 and 1 - C < 1e-6 at x = 100 via the log path."""
    run_criterion("strong-field", 1e-6)
    far = concurrence_closed(spec_of(100.0, 20, Sign.PLUS))
    assert far.path is EvalPath.SIGNED_LOG
    assert far.value > 1.0 - 1e-6


def test_criterion_6_curves_never_decrease():
    """Concurrence grows with field strength along both preset families."""
    result = run_criterion("figure-shape", 1e-9)
    assert result.worst <= 1e-9


def test_criterion_7_moment_identities():
    """Hermite-route moments reduce to Laguerre forms and number-basis sums."""
    run_criterion("moment-identities", 1e-10)


def test_criterion_8_zero_field_limit():
    """Closed form at x = 1e-6 meets the Richardson-extrapolated oracle,

    confirming the limit expression 2 sqrt(1+m) / (2+m) before use."""
    result = run_criterion("zero-field-limit", 1e-4)
    assert result.worst <= 1e-4
    for m in (1, 3, 5):
        near = concurrence_closed(spec_of(1e-6, m, Sign.MINUS)).value
        assert near == pytest.approx(
            concurrence_small_alpha_limit(m, Sign.MINUS), abs=1e-4
        )
