import math
import random

import pytest

from smeecs.specfun import (
    ONE,
    ZERO,
    SignedLogValue,
    cross_moment,
    hermite2,
    laguerre,
    laguerre_even_odd,
    laguerre_signed_log,
    log_factorial,
)

from oracles import fock_cross_moment, laguerre_exact, log_abs_fraction


def rel_err(got, expected, floor=1e-300):
    if got == expected:
        return 0.0
    return abs(got - expected) / max(abs(expected), abs(got), floor)


# ---------------------------------------------------------------- laguerre

@pytest.mark.parametrize("m,x,expected", [
    (0, 5.0, 1.0),
    (1, 2.0, -1.0),
    (1, 1.0, 0.0),
    (2, 1.0, -0.5),
    (2, 2.0, -1.0),
    (3, 0.0, 1.0),
    (2, -1.0, 3.5),      # 1 + 2 + 1/2
    (3, -2.0, 43.0 / 3.0),
])
def test_laguerre_known_values(m, x, expected):
    assert laguerre(m, x) == pytest.approx(expected, rel=1e-15, abs=1e-15)


def test_laguerre_rejects_negative_order():
    with pytest.raises(ValueError):
        laguerre(-1, 0.5)


@pytest.mark.parametrize("m", [0, 1, 2, 3, 5, 8, 13, 21, 30])
@pytest.mark.parametrize("x", [-50.0, -12.5, -1.0, -0.25, 0.0, 0.25, 4.75, 12.5, 50.0])
def test_laguerre_matches_exact_sum(m, x):
    """Recurrence vs the defining sum evaluated in exact rationals."""
    expected = float(laguerre_exact(m, x))
    assert rel_err(laguerre(m, x), expected) < 1e-9


def test_laguerre_negative_axis_at_least_one():
    rng = random.Random(20240817)
    for _ in range(200):
        m = rng.randrange(0, 60)
        x = rng.uniform(0.0, 80.0)
        assert laguerre(m, -x) >= 1.0


def test_laguerre_even_odd_recombines():
    rng = random.Random(7)
    for _ in range(200):
        m = rng.randrange(0, 40)
        x = rng.uniform(0.0, 60.0)
        even, odd = laguerre_even_odd(m, x)
        assert even >= 1.0 and odd >= 0.0
        assert rel_err(even + odd, float(laguerre_exact(m, -x))) < 1e-13
        assert abs((even - odd) - laguerre(m, x)) <= 1e-12 * (even + odd)


def test_laguerre_even_odd_rejects_negative_x():
    with pytest.raises(ValueError):
        laguerre_even_odd(3, -1.0)


# ------------------------------------------------------ laguerre_signed_log

@pytest.mark.parametrize("m", [0, 1, 2, 5, 11, 30])
@pytest.mark.parametrize("x", [-50.0, -3.0, -0.5, 0.0, 0.5, 3.0, 17.0, 50.0])
def test_signed_log_matches_direct(m, x):
    direct = laguerre(m, x)
    sl = laguerre_signed_log(m, x)
    if direct == 0.0:
        assert sl.sign == 0
    else:
        assert sl.sign == math.copysign(1, direct)
        assert rel_err(sl.to_real(), direct) < 1e-12


def test_signed_log_exact_zero():
    assert laguerre_signed_log(1, 1.0).sign == 0


def test_signed_log_beyond_double_range():
    """Log-domain values keep working where floats would overflow."""
    got = laguerre_signed_log(3, -400.0)
    expected = log_abs_fraction(laguerre_exact(3, -400))
    assert got.sign == 1
    assert got.log_mag == pytest.approx(expected, rel=1e-12)

    huge = laguerre_signed_log(300, -1e4)
    ref = log_abs_fraction(laguerre_exact(300, -10**4))
    assert huge.sign == 1
    assert huge.log_mag == pytest.approx(ref, rel=1e-10)


def test_signed_log_positive_axis_large_order():
    # sign and log both checked against the exact sum, well past m = 150
    for m, x in ((60, 35.0), (200, 12.5), (170, 90.0)):
        exact = laguerre_exact(m, x)
        sl = laguerre_signed_log(m, x)
        assert sl.sign == (1 if exact > 0 else -1)
        assert sl.log_mag == pytest.approx(log_abs_fraction(exact), abs=1e-9)


# ----------------------------------------------------------- SignedLogValue

def test_signed_log_value_roundtrip():
    rng = random.Random(99)
    for _ in range(300):
        v = rng.uniform(-1.0, 1.0) * 10.0 ** rng.randrange(-250, 250)
        s = SignedLogValue.from_real(v)
        assert s.sign == math.copysign(1, v)
        assert s.log_mag == pytest.approx(math.log(abs(v)), rel=1e-15, abs=1e-15)
        # value-level round-trip error grows like |log| * eps
        assert s.to_real() == pytest.approx(v, rel=5e-13)
    assert SignedLogValue.from_real(0.0) is ZERO
    assert ZERO.to_real() == 0.0
    assert ONE.to_real() == 1.0


def test_signed_log_value_arithmetic():
    rng = random.Random(4242)
    for _ in range(300):
        a = rng.uniform(-8.0, 8.0)
        b = rng.uniform(0.1, 8.0) * rng.choice([-1.0, 1.0])
        sa, sb = SignedLogValue.from_real(a), SignedLogValue.from_real(b)
        assert (sa * sb).to_real() == pytest.approx(a * b, rel=1e-13, abs=1e-300)
        assert (sa / sb).to_real() == pytest.approx(a / b, rel=1e-13, abs=1e-300)
        if abs(a + b) > 0.05 * (abs(a) + abs(b)):  # skip catastrophic cancellation
            assert (sa + sb).to_real() == pytest.approx(a + b, rel=1e-12)
            assert (sa - sb).to_real() == pytest.approx(a - b, rel=1e-12)


def test_signed_log_value_edges():
    big = SignedLogValue(1, 5000.0)
    assert big.to_real() == math.inf
    assert (-big).to_real() == -math.inf
    assert (big * ZERO) is ZERO
    assert (ZERO + big) == big
    x = SignedLogValue.from_real(3.0)
    assert (x - x) is ZERO
    assert x.sqrt().to_real() == pytest.approx(math.sqrt(3.0), rel=1e-15)
    with pytest.raises(ValueError):
        SignedLogValue.from_real(-4.0).sqrt()
    with pytest.raises(ZeroDivisionError):
        x / ZERO


# ----------------------------------------------------------------- hermite2

def test_hermite2_trivial_orders():
    eta, tld = 1.7 - 0.3j, -0.4 + 2.1j
    assert hermite2(0, 0, eta, tld) == 1
    assert hermite2(1, 0, eta, tld) == eta
    assert hermite2(0, 1, eta, tld) == tld
    assert hermite2(1, 1, eta, tld) == pytest.approx(eta * tld - 1)
    assert hermite2(2, 1, eta, tld) == pytest.approx(eta * eta * tld - 2 * eta)


def test_hermite2_index_symmetry():
    rng = random.Random(11)
    for _ in range(100):
        m, n = rng.randrange(0, 9), rng.randrange(0, 9)
        eta = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        tld = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        assert hermite2(m, n, eta, tld) == pytest.approx(
            hermite2(n, m, tld, eta), rel=1e-12, abs=1e-12
        )


def test_hermite2_raising_recurrence():
    # H_{m+1,n}(e, t) = e H_{m,n} - n H_{m,n-1}
    rng = random.Random(12)
    for _ in range(100):
        m, n = rng.randrange(0, 8), rng.randrange(1, 8)
        eta = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        tld = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        lhs = hermite2(m + 1, n, eta, tld)
        rhs = eta * hermite2(m, n, eta, tld) - n * hermite2(m, n - 1, eta, tld)
        assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)


# ------------------------------------------------------------- cross_moment

@pytest.mark.parametrize("m", range(9))
@pytest.mark.parametrize("x", [0.25, 1.5, 3.0])
def test_cross_moment_diagonal_reductions(m, x):
    """Both coherent diagonals against the exact rational Laguerre sum."""
    a = math.sqrt(x)
    fact = math.factorial(m)
    same = cross_moment(m, m, a, a)
    expect_same = fact * float(laguerre_exact(m, -a * a))
    assert abs(same.imag) <= 1e-12 * abs(same.real)
    assert rel_err(same.real, expect_same) < 1e-12

    opp = cross_moment(m, m, a, -a)
    expect_opp = fact * math.exp(-2.0 * x) * float(laguerre_exact(m, a * a))
    assert abs(opp - expect_opp) <= 1e-12 * fact * math.exp(-2.0 * x) * (
        1.0 + abs(float(laguerre_exact(m, a * a)))
    )


def test_cross_moment_matches_fock_sum():
    rng = random.Random(31337)
    for _ in range(25):
        n, m = rng.randrange(0, 7), rng.randrange(0, 7)
        alpha = complex(rng.uniform(-1.4, 1.4), rng.uniform(-1.4, 1.4))
        beta = complex(rng.uniform(-1.4, 1.4), rng.uniform(-1.4, 1.4))
        brute = fock_cross_moment(n, m, alpha, beta)
        got = cross_moment(n, m, alpha, beta)
        assert got == pytest.approx(brute, rel=1e-8, abs=1e-12)


def test_cross_moment_global_phase_covariance():
    # alpha, beta -> e^{i t}(alpha, beta) multiplies the moment by e^{i(n-m)t}:
    # the bra level sits n - m below the ket level, and conjugation flips its phase
    rng = random.Random(5)
    for _ in range(50):
        n, m = rng.randrange(0, 6), rng.randrange(0, 6)
        t = rng.uniform(0, 2 * math.pi)
        alpha = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
        beta = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
        rot = complex(math.cos(t), math.sin(t))
        lhs = cross_moment(n, m, alpha * rot, beta * rot)
        rhs = rot ** (n - m) * cross_moment(n, m, alpha, beta)
        assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-12)


def test_vacuum_moment_is_overlap():
    # n = m = 0 must collapse to the bare coherent overlap <alpha|beta>
    import cmath
    alpha, beta = 0.9 + 0.2j, -0.3 + 1.1j
    expected = cmath.exp(
        alpha.conjugate() * beta - 0.5 * (abs(alpha) ** 2 + abs(beta) ** 2)
    )
    got = cross_moment(0, 0, alpha, beta)
    assert got == pytest.approx(expected, rel=1e-14)
    assert got == pytest.approx(fock_cross_moment(0, 0, alpha, beta), rel=1e-12)


def test_log_factorial_matches_exact():
    for n in (0, 1, 2, 5, 170, 171, 500):
        assert log_factorial(n) == pytest.approx(math.log(math.factorial(n)), rel=1e-13)
    with pytest.raises(ValueError):
        log_factorial(-1)
