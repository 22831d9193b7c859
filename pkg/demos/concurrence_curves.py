"""Concurrence vs. field strength for both branch signs.

Reproduces the two standard curve families: the even branch for
m = 0, 1, 3, 5, 20 and the odd branch for m = 0, 3, 5, 10, 20, on
x = |alpha|^2 in [0, 6].  Two things are worth noticing and both are
printed below: every curve is monotone in x, and the two families start
from very different left endpoints — the even branch always from 0, the
odd branch from 2 sqrt(1+m)/(2+m), which is 1 only for m = 0.
"""

import math

from smeecs import Sign, StateSpec, concurrence_closed, concurrence_small_alpha_limit

FAMILIES = (
    ("even branch (+)", Sign.PLUS, (0, 1, 3, 5, 20)),
    ("odd branch  (-)", Sign.MINUS, (0, 3, 5, 10, 20)),
)
XS = [0.25 * i for i in range(25)]  # 0 .. 6


def curve(m, sign):
    values = []
    for x in XS:
        if x == 0.0 and sign is Sign.MINUS:
            values.append(float("nan"))  # no state there
            continue
        values.append(concurrence_closed(StateSpec(math.sqrt(x), m, sign)).value)
    return values


for label, sign, ms in FAMILIES:
    print(f"\n{label}")
    print("    x   " + "".join(f"   m={m:<4d}" for m in ms))
    table = {m: curve(m, sign) for m in ms}
    for i, x in enumerate(XS):
        if i % 4:
            continue  # print every 1.0 in x; curves are smooth
        cells = "".join(
            "      - " if math.isnan(table[m][i]) else f"  {table[m][i]:.4f}"
            for m in ms
        )
        print(f"  {x:5.2f} {cells}")
    print("  left endpoints (x -> 0):", "  ".join(
        f"m={m}: {concurrence_small_alpha_limit(m, sign):.4f}" for m in ms
    ))
    for m in ms:
        values = [v for v in table[m] if not math.isnan(v)]
        drops = sum(1 for a, b in zip(values, values[1:]) if b < a - 1e-9)
        assert drops == 0, f"curve m={m} lost monotonicity"
    print("  every curve monotone on the grid: yes")

print(
    "\nNote the even family at small x: more added photons mean *more*\n"
    "entanglement there (the slope is 2 sqrt(1+m) x), while the odd family\n"
    "starts lower for larger m and climbs to 1."
)
