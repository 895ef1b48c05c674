"""Mixing two equal samples of the same gas, with and without 1/N!.

Each half holds N particles in 10N cells.  Without the factorial the
mixing entropy is 2N ln 2 whatever the gas; with it, the entropy per
particle dies away as N grows.

Run: python3 demos/gibbs_mixing.py
"""
import math

from permstat import GasSample, extensivity_defect, mixing_entropy

print(f"{'N':>7} {'uncorrected':>14} {'2N ln 2':>14} {'corrected':>12} {'per particle':>13}")
for n in (10, 100, 1000, 10000):
    a, b = GasSample(n, 10 * n), GasSample(n, 10 * n)
    raw = mixing_entropy(a, b, corrected=False)
    fixed = mixing_entropy(a, b, corrected=True)
    print(f"{n:>7} {raw:>14.6f} {2 * n * math.log(2):>14.6f} {fixed:>12.6f} {fixed / (2 * n):>13.6f}")

print("\ndifferent gases still mix:")
s = mixing_entropy(GasSample(100, 1000), GasSample(100, 1000, species="argon"))
print(f"  N=100 each: {s:.6f}")

print("\nS(2N, 2C) - 2 S(N, C) at C = 10N")
for n in (10, 100, 1000):
    g = GasSample(n, 10 * n)
    print(f"  N={n:<5} uncorrected={extensivity_defect(g, 2, False):10.4f}"
          f"  corrected={extensivity_defect(g, 2, True):8.4f}")
