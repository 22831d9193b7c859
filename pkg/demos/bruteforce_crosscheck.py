"""Closed form vs. independent brute force, side by side.

The closed-form concurrence rests on Laguerre/Hermite identities; the
brute-force route never touches them — it builds the state amplitude by
amplitude in a truncated number basis, traces out one mode and measures
the mixedness of what is left.  If the identities were wrong anywhere,
the two columns below would disagree.  They agree to ~1e-14, and the
un-normalized squared norm agrees with the closed normalization constant
to the same level.
"""

import math

from smeecs import (
    Sign,
    StateSpec,
    build_state,
    concurrence_closed,
    concurrence_oracle,
    default_truncation,
    normalization_N,
)

print("   x   m sign    closed            brute force       |diff|    norm rel.err")
for m in (0, 1, 3, 5):
    for x in (0.5, 2.0, 6.0):
        for sign in Sign:
            spec = StateSpec(alpha=math.sqrt(x), m=m, sign=sign)
            closed = concurrence_closed(spec).value
            brute = concurrence_oracle(spec).value
            state = build_state(spec)
            norm_closed = normalization_N(spec) ** -2.0
            norm_err = abs(state.norm_sq - norm_closed) / norm_closed
            print(
                f"  {x:4.1f} {m:2d}  {sign.value}   {closed:.15f} {brute:.15f} "
                f"{abs(closed - brute):.1e}   {norm_err:.1e}"
            )

x, m = 6.0, 5
print(
    f"\ntruncation rule at x={x}, m={m}: keep {default_truncation(x, m)} levels "
    "(Poisson peak + 10 sigma + excitation shift + floor)."
)
print(
    "The builder certifies every state: visible amplitude mass in the last\n"
    "two rows/columns of the grid raises TruncationTooSmallError instead of\n"
    "silently returning a truncated answer."
)
