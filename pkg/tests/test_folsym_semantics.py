import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from permstat.folsym import (EvaluationError, FiniteModel, Forall, ModelBatch, ModelExplosionError, Signature,
                             check_equivalence, check_total_symmetry, enumerate_models,
                             evaluate, free_variables, parse, satisfiable_cardinalities)

from corpus import CORPUS, EXACTLY_TWO, GENERAL
from test_folsym_syntax import formulas


def model(size, **rels):
    return FiniteModel(size, {k: frozenset(v) for k, v in rels.items()})


def test_evaluate_examples():
    assert evaluate(model(1), parse("forall x. x = x"))
    m = model(2, F={(0, 1)})
    assert evaluate(m, parse("exists x. exists y. F(x, y)"))
    assert not evaluate(m, parse("forall x. exists y. F(x, y)"))


def test_evaluate_free_variables_and_names():
    m = FiniteModel(3, {"P": frozenset({(2,)})}, {1: 2})
    assert evaluate(m, parse("P(x)"), {"x": 2})
    assert evaluate(m, parse("P(@a1)", allow_names=True))
    with pytest.raises(EvaluationError):
        evaluate(m, parse("P(x)"))
    with pytest.raises(EvaluationError):
        evaluate(m, parse("P(@a2)", allow_names=True))
    with pytest.raises(EvaluationError):
        evaluate(m, parse("exists x. G(x)"))


def test_model_validation():
    with pytest.raises(ValueError):
        model(2, P={(2,)})
    with pytest.raises(ValueError):
        model(0)


def test_enumerate_model_counts():
    assert len(list(enumerate_models(Signature(), 3))) == 1
    assert len(list(enumerate_models(Signature.parse("P/1"), 2))) == 4
    binary = list(enumerate_models(Signature.parse("F/2"), 2))
    assert len(binary) == 16
    assert len(set(m.relations["F"] for m in binary)) == 16


def test_enumeration_guard():
    with pytest.raises(ModelExplosionError) as err:
        list(enumerate_models(Signature.parse("F/2, G/2"), 4))
    assert err.value.count == 2**32
    with pytest.raises(ModelExplosionError):
        ModelBatch(Signature.parse("F/3"), 3)


def test_batch_numbering_matches_stream():
    sig = Signature.parse("P/1, Q/0, R/2")
    batch = ModelBatch(sig, 2)
    stream = list(enumerate_models(sig, 2))
    assert batch.count == len(stream)
    assert [batch.model(i) for i in range(batch.count)] == stream


SIG = Signature.parse("P/1, Q/0, R/2")


def _close(f):
    for v in sorted(free_variables(f)):
        f = Forall(v, f)
    return f


@settings(max_examples=150, deadline=None)
@given(formulas)
def test_batch_agrees_with_scalar(f):
    f = _close(f)
    for size in (1, 2):
        batch = ModelBatch(SIG, size)
        got = batch.evaluate(f)
        want = np.array([evaluate(m, f) for m in enumerate_models(SIG, size)])
        assert np.array_equal(got, want)


@pytest.mark.parametrize("text", GENERAL)
def test_name_assignment_irrelevant(text):
    f = parse(text)
    sig = Signature.of({"F": 1, "G": 1, "R": 2, "P": 1, "Q": 0})
    for m in enumerate_models(sig, 2):
        base = evaluate(m, f)
        for a1, a2 in itertools.product(range(2), repeat=2):
            assert evaluate(m.with_names({1: a1, 2: a2}), f) == base


def test_check_equivalence_examples():
    t = parse(EXACTLY_TWO)
    assert check_equivalence(t, t, 4).ok
    v = check_equivalence(parse("exists x. F(x)"), parse("forall x. F(x)"), 2)
    assert not v.ok
    assert v.counterexample == model(2, F={(0,)})
    assert v.to_dict()["counterexample"] == {"universe_size": 2, "relations": {"F": [[0]]}}


def test_check_equivalence_scalar_route_agrees():
    a, b = parse("exists x. F(x)"), parse("forall x. F(x)")
    assert check_equivalence(a, b, 3, method="scalar") == check_equivalence(a, b, 3)
    t = parse("forall x. exists y. R(x, y)")
    assert check_equivalence(t, t, 2, method="scalar").ok


def test_check_equivalence_needs_sentences():
    with pytest.raises(ValueError):
        check_equivalence(parse("F(x)"), parse("forall x. F(x)"), 2)


def test_total_symmetry_examples():
    assert check_total_symmetry(parse("x1 = x2"), 2, 3).ok
    v = check_total_symmetry(parse("F(x1, x2)"), 2, 3)
    assert not v.ok
    assert v.counterexample == model(2, F={(0, 1)})
    assert v.assignment == (0, 1)
    assert v.permutation == (1, 0)


def test_total_symmetry_rejects_other_variables():
    with pytest.raises(ValueError):
        check_total_symmetry(parse("F(x1, y)"), 2, 2)


def test_cardinalities_examples():
    assert satisfiable_cardinalities(parse(EXACTLY_TWO), 4) == {2}
    assert satisfiable_cardinalities(parse("forall x. x = x"), 4) == {1, 2, 3, 4}
    assert satisfiable_cardinalities(parse("exists x. x != x"), 4) == set()


@pytest.mark.parametrize("text, n", CORPUS)
def test_corpus_cardinalities(text, n):
    assert satisfiable_cardinalities(parse(text), 4) == {n}
