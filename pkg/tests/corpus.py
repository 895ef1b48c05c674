"""Sentences whose models all have one known size (checked up to size 4)."""

EXACTLY_TWO = "exists x. exists y. (~(x = y) & forall z. (z = x | z = y))"

CORPUS = [
    # (text, cardinality)
    ("exists x. forall y. y = x", 1),
    (EXACTLY_TWO, 2),
    ("exists x. exists y. exists z. (x != y & x != z & y != z & forall w. (w = x | w = y | w = z))", 3),
    ("(forall x. forall y. F(x, y)) & " + EXACTLY_TWO, 2),
    ("(exists x. P(x)) & (exists x. ~P(x)) & forall x. forall y. forall z. (x = y | x = z | y = z)", 2),
    ("(forall x. exists y. (R(x, y) & x != y)) & forall x. forall y. forall z. (x = y | y = z | x = z)", 2),
    ("(exists x. exists y. exists z. (x != y & x != z & y != z & forall w. (w = x | w = y | w = z)))"
     " & (exists x. P(x)) & forall x. forall y. (P(x) & P(y) -> x = y)", 3),
    ("(Q | forall x. P(x)) & exists x. forall y. y = x", 1),
    ("forall x. forall y. (x = y <-> P(x))", 1),
    ("~(exists x. exists y. exists z. exists w. (x != y & x != z & x != w & y != z & y != w & z != w))"
     " & exists x. exists y. exists z. (x != y & x != z & y != z)", 3),
]

# closed sentences for prenex / evaluator checks (no cardinality restriction)
GENERAL = [
    "forall x. F(x)",
    "~(exists x. F(x))",
    "(exists x. F(x)) & (exists x. G(x))",
    "(forall x. F(x)) -> exists y. G(y)",
    "(forall x. exists y. R(x, y)) <-> exists y. forall x. R(x, y)",
    "forall x. (F(x) | exists x. G(x))",
    "~(forall x. (F(x) -> exists y. (R(x, y) & ~G(y))))",
    "exists x. forall y. (R(x, y) <-> ~R(y, x))",
    "Q -> forall x. (F(x) <-> Q)",
] + [text for text, _ in CORPUS]
