import itertools

import pytest
from hypothesis import given, settings, strategies as st

from permstat.folsym import (And, Eq, Exists, Forall, HypothesisError, Name, Not, Or, Pred, Var, build_A,
                             check_equivalence, check_total_symmetry, free_variables, names, parse, prenex,
                             satisfiable_cardinalities, symmetrize, symmetrize_existential)
from permstat.folsym.syntax import Quantifier, substitute, walk

from corpus import CORPUS, EXACTLY_TWO, GENERAL

x1, x2, x3 = Var("x1"), Var("x2"), Var("x3")
a1, a2, a3 = Name(1), Name(2), Name(3)


def is_prenex(f):
    while isinstance(f, Quantifier):
        f = f.body
    return not any(isinstance(g, Quantifier) for g in walk(f))


def test_prenex_examples():
    assert prenex(parse("forall x. F(x)")) == Forall("x1", Pred("F", (x1,)))
    assert prenex(parse("~(exists x. F(x))")) == Forall("x1", Not(Pred("F", (x1,))))
    assert prenex(parse("(exists x. F(x)) & (exists x. G(x))")) == \
        Exists("x1", Exists("x2", And((Pred("F", (x1,)), Pred("G", (x2,))))))


def test_prenex_rejects_open_formula():
    with pytest.raises(ValueError):
        prenex(parse("F(x)"))


def test_prenex_renames_user_variables_safely():
    f = parse("exists x2. forall x1. R(x2, x1)")
    assert prenex(f) == Exists("x1", Forall("x2", Pred("R", (x1, x2))))


@pytest.mark.parametrize("text", GENERAL)
def test_prenex_equivalent_and_rectified(text):
    f = parse(text)
    p = prenex(f)
    assert is_prenex(p)
    bound = [q.var for q in walk(p) if isinstance(q, Quantifier)]
    assert bound == [f"x{i}" for i in range(1, len(bound) + 1)]
    assert check_equivalence(f, p, 3).ok


def test_symmetrize_existential_examples():
    f = parse("F(x1, x2)")
    assert symmetrize_existential(f, 2) == Or((Pred("F", (x1, x2)), Pred("F", (x2, x1))))
    three = symmetrize_existential(parse("F(x1, x2, x3)"), 3)
    assert isinstance(three, Or) and len(three.args) == 6
    assert len(set(three.args)) == 6
    sym = symmetrize_existential(parse("x1 = x2"), 2)
    assert sym == Or((Eq(x1, x2), Eq(x2, x1)))


def test_symmetrize_existential_variable_mismatch():
    with pytest.raises(ValueError):
        symmetrize_existential(parse("F(x1, x3)"), 2)
    with pytest.raises(ValueError):
        symmetrize_existential(parse("F(x1, x1)"), 2)


@pytest.mark.parametrize("text, n, bound", [("F(x1, x2)", 2, 3), ("R(x1, x2) & ~R(x2, x1)", 2, 3),
                                            ("F(x1, x2, x3)", 3, 2), ("P(x1) & ~P(x2) & x3 != x1", 3, 3)])
def test_symmetrize_existential_is_symmetric_and_equivalent(text, n, bound):
    matrix = parse(text)
    sym = symmetrize_existential(matrix, n)
    assert check_total_symmetry(sym, n, bound).ok
    closed_a, closed_b = matrix, sym
    for v in reversed([f"x{i}" for i in range(1, n + 1)]):
        closed_a, closed_b = Exists(v, closed_a), Exists(v, closed_b)
    assert check_equivalence(closed_a, closed_b, bound).ok
    # permuting the free variables gives an equivalent formula
    for perm in itertools.permutations(range(1, n + 1)):
        permuted = substitute(sym, {f"x{i}": Var(f"x{p}") for i, p in enumerate(perm, start=1)})
        both = Forall("x1", Forall("x2", Forall("x3", And((Or((Not(sym), permuted)), Or((Not(permuted), sym)))))))
        assert satisfiable_cardinalities(Not(both), bound) == set()


def test_build_A():
    total = lambda *ts: Forall("x", Or(tuple(Eq(Var("x"), t) for t in ts)) if len(ts) > 1 else Eq(Var("x"), ts[0]))
    assert build_A(1) == Forall("x", Eq(Var("x"), a1))
    assert build_A(2) == And((Not(Eq(a1, a2)), total(a1, a2)))
    three = build_A(3)
    assert three.args[:3] == (Not(Eq(a1, a2)), Not(Eq(a1, a3)), Not(Eq(a2, a3)))
    assert three.args[3] == total(a1, a2, a3)
    with pytest.raises(ValueError):
        build_A(0)


def test_symmetrize_exactly_two():
    t = parse(EXACTLY_TWO)
    r = symmetrize(t, 2, check_max_size=4)
    assert r.cardinalities == {2}
    assert free_variables(r.g) == {"x1", "x2"}
    assert not names(r.g)
    assert r.t_s == Exists("x1", Exists("x2", r.g))
    assert check_equivalence(t, r.t_s, 4).ok
    assert check_total_symmetry(r.g, 2, 4).ok


def test_symmetrize_universal_binary():
    t = parse("(forall x. forall y. F(x, y)) & " + EXACTLY_TWO)
    r = symmetrize(t, 2)
    # the two universal quantifiers became conjunctions over all name pairs
    pf = r.prenex
    assert [cls for cls, _ in pf.prefix][:2] == [Forall, Forall]
    named = r.named_matrix
    atoms = {g for g in walk(named) if isinstance(g, Pred)}
    assert atoms == {Pred("F", (s, u)) for s in (a1, a2) for u in (a1, a2)}
    assert check_equivalence(t, r.t_s, 4).ok
    assert check_total_symmetry(r.g, 2, 4).ok


def test_symmetrize_stages():
    t = parse("forall x. exists y. R(x, y)")
    r = symmetrize(t, 2)
    g1, g2 = r.stages
    r_ = lambda u, v: Pred("R", (u, v))
    assert g1 == Or((r_(x1, a1), r_(x1, a2)))
    assert g2 == And((Or((r_(a1, a1), r_(a1, a2))), Or((r_(a2, a1), r_(a2, a2)))))
    assert r.t2 == And((g2, build_A(2)))


def test_symmetrize_one_element():
    t = parse("exists x. forall y. y = x")
    r = symmetrize(t, 1)
    assert r.t_s == Exists("x1", r.g)
    assert r.g.args[-1] == Forall("x", Eq(Var("x"), x1))
    assert check_total_symmetry(r.g, 1, 3).ok
    assert check_equivalence(t, r.t_s, 4).ok


def test_symmetrize_quantifier_free_sentence():
    t = parse("Q & ~Q")
    r = symmetrize(t, 2)
    assert r.stages == ()
    assert check_equivalence(t, r.t_s, 3).ok


def test_symmetrize_errors():
    with pytest.raises(ValueError):
        symmetrize(parse(EXACTLY_TWO), 0)
    with pytest.raises(ValueError):
        symmetrize(parse("F(x)"), 1)
    with pytest.raises(ValueError):
        symmetrize(parse("P(@a1)", allow_names=True), 1)
    with pytest.raises(HypothesisError):
        symmetrize(parse("forall x. x = x"), 2, check_max_size=3)


def test_symmetrize_warns_about_bound():
    from permstat.folsym import BoundedCheckWarning

    with pytest.warns(BoundedCheckWarning):
        symmetrize(parse(EXACTLY_TWO), 2, check_max_size=3)


@pytest.mark.parametrize("text, n", CORPUS)
def test_corpus_theorem(text, n):
    t = parse(text)
    r = symmetrize(t, n, check_max_size=4)
    assert check_total_symmetry(r.g, n, 4).ok
    assert check_equivalence(t, r.t_s, 4).ok
    assert satisfiable_cardinalities(r.t_s, 4) <= {n}


def test_construction_needs_the_hypothesis():
    # P has models of every size; without the size restriction T_S is not equivalent
    t = parse("exists x. P(x)")
    r = symmetrize(t, 2)
    assert not check_equivalence(t, r.t_s, 3).ok
    assert check_total_symmetry(r.g, 2, 3).ok


_t = st.sampled_from([x1, x2])
_atoms = st.one_of(st.builds(lambda a, b: Pred("F", (a, b)), _t, _t), st.builds(lambda a: Pred("P", (a,)), _t),
                   st.builds(Eq, _t, _t))
_matrices = st.recursive(_atoms, lambda ch: st.one_of(
    st.builds(Not, ch),
    st.builds(lambda xs: And(tuple(xs)), st.lists(ch, min_size=2, max_size=3)),
    st.builds(lambda xs: Or(tuple(xs)), st.lists(ch, min_size=2, max_size=3))), max_leaves=6)


@settings(max_examples=60, deadline=None)
@given(_matrices.filter(lambda f: free_variables(f) == {"x1", "x2"}))
def test_symmetrize_existential_property(matrix):
    sym = symmetrize_existential(matrix, 2)
    assert check_total_symmetry(sym, 2, 3).ok
    assert check_equivalence(Exists("x1", Exists("x2", matrix)), Exists("x1", Exists("x2", sym)), 3).ok
