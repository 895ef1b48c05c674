"""Rewrite a sentence whose models all have N elements as
exists x1..xN. G(x1..xN), with G unchanged by any shuffle of x1..xN.

Run: python3 demos/symmetrization.py
"""
import warnings

from permstat.folsym import check_equivalence, check_total_symmetry, parse, size, symmetrize, to_text

warnings.simplefilter("ignore")

# a one-element universe on which P holds everywhere
t = parse("forall x. forall y. (x = y <-> P(x))")
r = symmetrize(t, 1, check_max_size=4)
print("sentence:", to_text(t))
print("prenex:  ", to_text(r.prenex.to_formula()))
print("T_S:     ", to_text(r.t_s))
print("equivalent up to size 4:", check_equivalence(t, r.t_s, 4).ok)

# two elements, a binary relation holding everywhere
t = parse("(forall x. forall y. F(x, y)) & exists x. exists y. (x != y & forall z. (z = x | z = y))")
r = symmetrize(t, 2, check_max_size=4)
print("\nsentence:", to_text(t))
print("model sizes up to 4:", sorted(r.cardinalities))
print("prenex:  ", to_text(r.prenex.to_formula()))
print(f"G has {size(r.g)} nodes after expanding {len(r.prenex.prefix)} quantifiers over 2 names")
print("equivalent up to size 4:", check_equivalence(t, r.t_s, 4).ok)
print("G symmetric up to size 4:", check_total_symmetry(r.g, 2, 4).ok)

# a matrix that is not symmetric, for contrast
v = check_total_symmetry(parse("F(x1, x2)"), 2, 3)
print("\nF(x1, x2) symmetric?", v.ok, "| counterexample:", v.counterexample, "at", v.assignment)
