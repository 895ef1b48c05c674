"""Finite models, satisfaction, and exhaustive bounded checks.

Two evaluators are provided.  :func:`evaluate` is the plain recursive
definition of truth in one model.  The checks (:func:`check_equivalence`
and friends) instead evaluate a formula on *every* model of a given size at
once: each atomic formula becomes a boolean numpy vector indexed by model
number, and connectives/quantifiers become elementwise operations.  Both
use the same model numbering, so counterexamples agree.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Set, Tuple, Union

import numpy as np

from .parser import Signature, signature_of
from .syntax import (And, Eq, Exists, Forall, Formula, Iff, Implies, Not, Or, Pred, Term, Var,
                     free_variables, names)

MAX_MODELS = 2**20


class ModelExplosionError(ValueError):
    def __init__(self, message: str, count: int):
        super().__init__(message)
        self.count = count


class EvaluationError(LookupError):
    """A name, variable or predicate has no interpretation."""


@dataclass(frozen=True)
class FiniteModel:
    """Universe ``{0, ..., size-1}``; equality is identity."""

    size: int
    relations: Mapping[str, FrozenSet[Tuple[int, ...]]]
    name_assignment: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("a model needs a non-empty universe")
        rels = {}
        for pred, tuples in self.relations.items():
            tuples = frozenset(tuple(t) for t in tuples)
            for t in tuples:
                if any(not 0 <= e < self.size for e in t):
                    raise ValueError(f"tuple {t} of {pred} lies outside a universe of size {self.size}")
            rels[pred] = tuples
        object.__setattr__(self, "relations", rels)
        for k, e in self.name_assignment.items():
            if not 0 <= e < self.size:
                raise ValueError(f"name @a{k} assigned outside the universe")

    def with_names(self, assignment: Mapping[int, int]) -> "FiniteModel":
        return FiniteModel(self.size, self.relations, dict(assignment))

    def to_dict(self) -> dict:
        out = {
            "universe_size": self.size,
            "relations": {p: sorted(list(t) for t in ts) for p, ts in sorted(self.relations.items())},
        }
        if self.name_assignment:
            out["names"] = {f"@a{k}": v for k, v in sorted(self.name_assignment.items())}
        return out

    def __str__(self):
        parts = [f"size={self.size}"]
        for p, ts in sorted(self.relations.items()):
            body = ", ".join("(" + ",".join(map(str, t)) + ")" for t in sorted(ts))
            parts.append(f"{p}={{{body}}}")
        return "; ".join(parts)


# --- scalar evaluation ----------------------------------------------------------


def _value(m: FiniteModel, t: Term, env: Mapping[str, int]) -> int:
    if isinstance(t, Var):
        try:
            return env[t.name]
        except KeyError:
            raise EvaluationError(f"variable {t.name} is unassigned") from None
    try:
        return m.name_assignment[t.index]
    except KeyError:
        raise EvaluationError(f"name {t} is unassigned") from None


def evaluate(m: FiniteModel, f: Formula, env: Optional[Mapping[str, int]] = None) -> bool:
    """Truth of ``f`` in ``m`` under the variable assignment ``env``."""
    env = dict(env or {})
    if isinstance(f, Pred):
        try:
            rel = m.relations[f.name]
        except KeyError:
            raise EvaluationError(f"predicate {f.name} is not interpreted in the model") from None
        return tuple(_value(m, t, env) for t in f.args) in rel
    if isinstance(f, Eq):
        return _value(m, f.left, env) == _value(m, f.right, env)
    if isinstance(f, Not):
        return not evaluate(m, f.body, env)
    if isinstance(f, And):
        return all(evaluate(m, a, env) for a in f.args)
    if isinstance(f, Or):
        return any(evaluate(m, a, env) for a in f.args)
    if isinstance(f, Implies):
        return (not evaluate(m, f.left, env)) or evaluate(m, f.right, env)
    if isinstance(f, Iff):
        return evaluate(m, f.left, env) == evaluate(m, f.right, env)
    if isinstance(f, Forall):
        return all(evaluate(m, f.body, {**env, f.var: e}) for e in range(m.size))
    if isinstance(f, Exists):
        return any(evaluate(m, f.body, {**env, f.var: e}) for e in range(m.size))
    raise TypeError(f"not a formula: {f!r}")


# --- model enumeration ------------------------------------------------------------


def model_count(sig: Signature, size: int) -> int:
    bits = sum(size**arity for _, arity in sig.predicates)
    return 2**bits


def _guard(sig: Signature, size: int, limit: int) -> int:
    count = model_count(sig, size)
    if count > limit:
        raise ModelExplosionError(
            f"signature {sig or '(empty)'} has {count} models of size {size} (limit {limit})", count)
    return count


def _tuples(size: int, arity: int) -> List[Tuple[int, ...]]:
    return list(itertools.product(range(size), repeat=arity))


def enumerate_models(sig: Signature, size: int, limit: int = MAX_MODELS) -> Iterator[FiniteModel]:
    """Every interpretation of ``sig`` over ``size`` elements, once each.

    Order: the first predicate varies slowest; within a predicate the
    relation runs through bitmasks ``0 .. 2**k - 1`` over its tuples in
    lexicographic order.  Model ``i`` of this stream is model ``i`` of the
    vectorised checks.
    """
    if size < 1:
        raise ValueError("universe size must be >= 1")
    _guard(sig, size, limit)
    tuple_lists = [_tuples(size, arity) for _, arity in sig.predicates]
    ranges = [range(2 ** len(tl)) for tl in tuple_lists]
    for masks in itertools.product(*ranges):
        rels = {}
        for (pred, _), tl, mask in zip(sig.predicates, tuple_lists, masks):
            rels[pred] = frozenset(t for i, t in enumerate(tl) if mask >> i & 1)
        yield FiniteModel(size, rels)


class ModelBatch:
    """All models of one size, as bit-vectors indexed by model number."""

    def __init__(self, sig: Signature, size: int, limit: int = MAX_MODELS):
        self.sig = sig
        self.size = size
        self.count = _guard(sig, size, limit)
        index = np.arange(self.count, dtype=np.int64)
        self._tuple_lists = {}
        self.bits: Dict[str, Dict[Tuple[int, ...], np.ndarray]] = {}
        offset = 0
        for pred, arity in reversed(sig.predicates):
            tl = _tuples(size, arity)
            self._tuple_lists[pred] = (offset, tl)
            self.bits[pred] = {t: ((index >> (offset + i)) & 1).astype(bool) for i, t in enumerate(tl)}
            offset += len(tl)

    def model(self, i: int) -> FiniteModel:
        rels = {}
        for pred, _ in self.sig.predicates:
            offset, tl = self._tuple_lists[pred]
            rels[pred] = frozenset(t for k, t in enumerate(tl) if i >> (offset + k) & 1)
        return FiniteModel(self.size, rels)

    def evaluate(self, f: Formula, env: Optional[Mapping[str, int]] = None,
                 name_assignment: Optional[Mapping[int, int]] = None) -> np.ndarray:
        """Truth value of ``f`` in every model of the batch."""
        v = _BatchEval(self, name_assignment or {}).run(f, dict(env or {}))
        if isinstance(v, np.ndarray):
            return v
        return np.full(self.count, bool(v))


Truth = Union[bool, np.ndarray]


def _not(v: Truth) -> Truth:
    return np.logical_not(v) if isinstance(v, np.ndarray) else not v


def _dead(v: Truth, value: bool) -> bool:
    """True when ``v`` is ``value`` in every model."""
    if isinstance(v, np.ndarray):
        return bool(v.all()) if value else not v.any()
    return v == value


class _BatchEval:
    def __init__(self, batch: ModelBatch, name_assignment: Mapping[int, int]):
        self.batch = batch
        self.names = name_assignment

    def term(self, t: Term, env: Mapping[str, int]) -> int:
        if isinstance(t, Var):
            if t.name not in env:
                raise EvaluationError(f"variable {t.name} is unassigned")
            return env[t.name]
        if t.index not in self.names:
            raise EvaluationError(f"name {t} is unassigned")
        return self.names[t.index]

    def run(self, f: Formula, env: Dict[str, int]) -> Truth:
        if isinstance(f, Pred):
            try:
                rel = self.batch.bits[f.name]
            except KeyError:
                raise EvaluationError(f"predicate {f.name} is not in the signature") from None
            return rel[tuple(self.term(t, env) for t in f.args)]
        if isinstance(f, Eq):
            return self.term(f.left, env) == self.term(f.right, env)
        if isinstance(f, Not):
            return _not(self.run(f.body, env))
        if isinstance(f, (And, Forall)):
            return self._fold(f, env, True)
        if isinstance(f, (Or, Exists)):
            return self._fold(f, env, False)
        if isinstance(f, Implies):
            return self.run(Or((Not(f.left), f.right)), env)
        if isinstance(f, Iff):
            a, b = self.run(f.left, env), self.run(f.right, env)
            return np.equal(a, b) if isinstance(a, np.ndarray) or isinstance(b, np.ndarray) else a == b
        raise TypeError(f"not a formula: {f!r}")

    def _fold(self, f: Formula, env: Dict[str, int], unit: bool) -> Truth:
        # unit=True: conjunction/forall, unit=False: disjunction/exists
        if isinstance(f, (Forall, Exists)):
            items = ((f.body, {**env, f.var: e}) for e in range(self.batch.size))
        else:
            items = ((a, env) for a in f.args)
        acc: Truth = unit
        for g, g_env in items:
            v = self.run(g, g_env)
            acc = (acc & v) if unit else (acc | v)
            if _dead(acc, not unit):
                return acc
        return acc


# --- verdicts -----------------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    ok: bool
    max_size: int
    models_checked: int
    counterexample: Optional[FiniteModel] = None
    assignment: Optional[Tuple[int, ...]] = None
    permutation: Optional[Tuple[int, ...]] = None

    @property
    def status(self) -> str:
        return "holds-up-to-bound" if self.ok else "counterexample"

    def __bool__(self):
        return self.ok

    def to_dict(self) -> dict:
        out = {"status": self.status, "max_size": self.max_size, "models_checked": self.models_checked}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample.to_dict()
        if self.assignment is not None:
            out["assignment"] = list(self.assignment)
        if self.permutation is not None:
            out["permutation"] = [i + 1 for i in self.permutation]
        return out


def _require_closed(*formulas: Formula) -> None:
    for f in formulas:
        if free_variables(f):
            raise ValueError(f"expected a sentence; free variables {sorted(free_variables(f))} in {f}")
        if names(f):
            raise ValueError(f"expected a sentence without names: {f}")


def _sizes(max_size: int) -> range:
    if max_size < 1:
        raise ValueError("max_size must be >= 1")
    return range(1, max_size + 1)


def check_equivalence(t1: Formula, t2: Formula, max_size: int, sig: Optional[Signature] = None,
                      limit: int = MAX_MODELS, method: str = "batch") -> Verdict:
    """Check ``t1 <-> t2`` in every model of every size ``1..max_size``.

    The first counterexample in (size, model number) order is returned.
    ``method="scalar"`` walks the models one by one with :func:`evaluate`.
    """
    _require_closed(t1, t2)
    sig = signature_of([t1, t2], sig)
    checked = 0
    for size in _sizes(max_size):
        if method == "scalar":
            for m in enumerate_models(sig, size, limit):
                checked += 1
                if evaluate(m, t1) != evaluate(m, t2):
                    return Verdict(False, max_size, checked, m)
            continue
        batch = ModelBatch(sig, size, limit)
        diff = batch.evaluate(t1) != batch.evaluate(t2)
        hits = np.flatnonzero(diff)
        if hits.size:
            return Verdict(False, max_size, checked + int(hits[0]) + 1, batch.model(int(hits[0])))
        checked += batch.count
    return Verdict(True, max_size, checked)


def check_total_symmetry(g: Formula, n: int, max_size: int, sig: Optional[Signature] = None,
                         limit: int = MAX_MODELS) -> Verdict:
    """Is ``g(x1..xn)`` invariant under every permutation of its arguments?

    Counterexamples are reported in (size, model, assignment, permutation)
    order; ``permutation`` is 1-based in :meth:`Verdict.to_dict`.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    variables = [f"x{i}" for i in range(1, n + 1)]
    extra = free_variables(g) - set(variables)
    if extra:
        raise ValueError(f"free variables {sorted(extra)} are not among x1..x{n}")
    if names(g):
        raise ValueError("g must not contain names")
    sig = signature_of([g], sig)
    perms = list(itertools.permutations(range(n)))[1:]
    checked = 0
    for size in _sizes(max_size):
        batch = ModelBatch(sig, size, limit)
        assignments = list(itertools.product(range(size), repeat=n))
        values = {a: batch.evaluate(g, dict(zip(variables, a))) for a in assignments}
        best = None
        for a in assignments:
            for p in perms:
                permuted = tuple(a[p[i]] for i in range(n))
                hits = np.flatnonzero(values[a] != values[permuted])
                if hits.size and (best is None or hits[0] < best[0]):
                    best = (int(hits[0]), a, p)
        if best is not None:
            i, a, p = best
            return Verdict(False, max_size, checked + i + 1, batch.model(i), a, p)
        checked += batch.count
    return Verdict(True, max_size, checked)


def satisfiable_cardinalities(t: Formula, max_size: int, sig: Optional[Signature] = None,
                              limit: int = MAX_MODELS) -> Set[int]:
    """Sizes ``1..max_size`` at which ``t`` has a model."""
    _require_closed(t)
    sig = signature_of([t], sig)
    return {size for size in _sizes(max_size) if ModelBatch(sig, size, limit).evaluate(t).any()}


def valid(t: Formula, max_size: int, sig: Optional[Signature] = None) -> bool:
    """``t`` true in every model up to ``max_size``."""
    _require_closed(t)
    sig = signature_of([t], sig)
    return all(ModelBatch(sig, size).evaluate(t).all() for size in _sizes(max_size))
