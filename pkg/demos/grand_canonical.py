"""Where 1/N! comes from when particles are drawn from a big reservoir.

Choosing which N of N* labelled particles sit in the region, then placing
them, gives binomial(N*, N) N! / N*^N of the unrestricted count; this tends
to 1 as the reservoir grows.  Also: the Bose-Einstein count approaches
C^N/N! as cells outnumber particles.

Run: python3 demos/grand_canonical.py
"""
from permstat import grand_canonical_limit, limit_ratio

sizes = [10, 100, 1000, 10000]
for n_star, r in zip(sizes, grand_canonical_limit(3, sizes)):
    print(f"N*={n_star:<6} ratio={float(r):.6f}  exact={r}")

print()
for c in sizes:
    r = limit_ratio(c, 3)
    print(f"C={c:<6} BE/(C^3/3!)={float(r):.6f}")
