"""The special-function layer on its own.

Everything above the concurrence reduces to three ingredients: Laguerre
polynomials (two evaluation routes), two-variable Hermite polynomials,
and the coherent-state moments they generate.  This script exercises
each directly.
"""

import math

from smeecs import SignedLogValue, cross_moment, hermite2, laguerre, laguerre_signed_log

print("Laguerre, both routes (m = 12):")
print("      x      recurrence        signed-log materialized")
for x in (-30.0, -2.0, 0.5, 4.0, 30.0):
    direct = laguerre(12, x)
    sl = laguerre_signed_log(12, x)
    print(f"  {x:7.1f}  {direct: .10e}   {sl.to_real(): .10e}")

sl = laguerre_signed_log(300, -1e4)
print(
    f"\nfar outside double range: L_300(-1e4) = exp({sl.log_mag:.6f}) "
    f"(sign {sl.sign:+d}) — about 10^{sl.log_mag / math.log(10.0):.1f}"
)
print(f"an exact polynomial zero is reported as sign 0: L_1(1) -> "
      f"sign {laguerre_signed_log(1, 1.0).sign}")

print("\nSignedLogValue arithmetic keeps ratios of such monsters honest:")
a = SignedLogValue(1, 9000.0)   # e^9000
b = SignedLogValue(1, 8999.0)
print(f"  e^9000 / e^8999        = {(a / b).to_real():.6f}")
print(f"  e^9000 - e^8999 (log)  = {(a - b).log_mag:.6f}  "
      f"(= 9000 + log(1 - 1/e) = {9000 + math.log1p(-math.exp(-1.0)):.6f})")

print("\ncoherent-state moments <alpha| a^n (a^dag)^m |beta>:")
alpha = 1.1 + 0.4j
x = abs(alpha) ** 2
for m in (0, 1, 2, 5):
    lhs = cross_moment(m, m, alpha, alpha).real
    rhs = math.factorial(m) * laguerre(m, -x)
    print(f"  n=m={m}: Hermite route {lhs: .12e}   Laguerre route {rhs: .12e}")

print("\nthe two-variable Hermite polynomial behind them, small cases:")
eta, tld = 1.5, -0.5
print(f"  H_11({eta}, {tld}) = {hermite2(1, 1, eta, tld).real}  (eta*tld - 1 = {eta * tld - 1})")
print(f"  H_21({eta}, {tld}) = {hermite2(2, 1, eta, tld).real}  "
      f"(eta^2 tld - 2 eta = {eta * eta * tld - 2 * eta})")
