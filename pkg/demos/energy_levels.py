"""Counting under fixed particle number and total energy.

A ground level with one cell and an excited level with two cells; two
particles sharing one unit of energy.

Run: python3 demos/energy_levels.py
"""
from math import factorial

from permstat import LevelSpec, MacrostateConstraint, count_W_D, count_W_I, enumerate_macrostates

spec = LevelSpec.of((0, 1), (1, 2))
c = MacrostateConstraint(n_total=2, e_total=1)

print("macrostates (N_0, N_1):", enumerate_macrostates(spec, c))
w_d, w_i = count_W_D(spec, c), count_W_I(spec, c)
print("distinguishable count W_D   =", w_d)
print("indistinguishable count W_I =", w_i)
print("W_D / N!                    =", w_d / factorial(2))

# a larger case, where W_D/N! and W_I part ways
spec = LevelSpec.of((0, 3), (1, 3), (2, 3))
c = MacrostateConstraint(n_total=4, e_total=4)
w_d = count_W_D(spec, c)
print("\nthree triply degenerate levels, N=4, E=4")
print("  W_D / N! =", w_d / factorial(4), " W_I =", count_W_I(spec, c))
