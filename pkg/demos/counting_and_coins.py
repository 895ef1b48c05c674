"""Three ways of counting two particles in three cells, and two coins.

Run: python3 demos/counting_and_coins.py
"""
from permstat import coins, count_arrangements, distribution, hilbert_dimensions, reduced_volume, CellUnit

print("two particles, three cells")
for kind in ("distinguishable", "reduced-classical", "bose-einstein", "fermi-dirac"):
    print(f"  {kind:18s} {count_arrangements(3, 2, kind)}")

# the classical volume divided by 2! is not an integer
print("  reduced volume     ", reduced_volume(3, 2, CellUnit(1)))
d = hilbert_dimensions(3, 2)
print(f"  Hilbert space      full={d.full} symmetric={d.symmetric} antisymmetric={d.antisymmetric}")

print("\ntwo coins")
for kind in ("reduced-classical", "bose-einstein"):
    probs = coins(kind)
    print(f"  {kind:18s} " + "  ".join(f"{k}={v}" for k, v in probs.items()))

# dividing by N! changes the count but not the normalised probabilities
print("\nfour particles, three cells: dividing by N! leaves probabilities alone")
a = distribution(3, 4, "distinguishable").as_dict()
b = distribution(3, 4, "reduced-classical").as_dict()
print("  identical:", a == b)
