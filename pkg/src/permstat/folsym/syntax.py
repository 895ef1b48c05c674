"""Abstract syntax for first-order sentences without function symbols.

Terms are variables or *names* (individual constants ``@a1, @a2, ...``).
The input language has no names; they only appear in intermediate
formulas built by the symmetrisation construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, Mapping, Set, Tuple, Union


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Name:
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("names are numbered from 1")

    def __str__(self):
        return f"@a{self.index}"


Term = Union[Var, Name]


class Formula:
    """Base class; every node is a frozen dataclass."""

    def __str__(self):
        return to_text(self)

    def __and__(self, other):
        return And((self, other))

    def __or__(self, other):
        return Or((self, other))

    def __invert__(self):
        return Not(self)


@dataclass(frozen=True, repr=False)
class Pred(Formula):
    name: str
    args: Tuple[Term, ...] = ()

    def __repr__(self):
        return f"Pred({self.name!r}, {self.args!r})"


@dataclass(frozen=True, repr=False)
class Eq(Formula):
    left: Term
    right: Term

    def __repr__(self):
        return f"Eq({self.left!r}, {self.right!r})"


@dataclass(frozen=True, repr=False)
class Not(Formula):
    body: Formula

    def __repr__(self):
        return f"Not({self.body!r})"


@dataclass(frozen=True, repr=False)
class And(Formula):
    """n-ary conjunction; the empty conjunction is true."""

    args: Tuple[Formula, ...]

    def __repr__(self):
        return f"And({self.args!r})"


@dataclass(frozen=True, repr=False)
class Or(Formula):
    """n-ary disjunction; the empty disjunction is false."""

    args: Tuple[Formula, ...]

    def __repr__(self):
        return f"Or({self.args!r})"


@dataclass(frozen=True, repr=False)
class Implies(Formula):
    left: Formula
    right: Formula

    def __repr__(self):
        return f"Implies({self.left!r}, {self.right!r})"


@dataclass(frozen=True, repr=False)
class Iff(Formula):
    left: Formula
    right: Formula

    def __repr__(self):
        return f"Iff({self.left!r}, {self.right!r})"


@dataclass(frozen=True, repr=False)
class Forall(Formula):
    var: str
    body: Formula

    def __repr__(self):
        return f"Forall({self.var!r}, {self.body!r})"


@dataclass(frozen=True, repr=False)
class Exists(Formula):
    var: str
    body: Formula

    def __repr__(self):
        return f"Exists({self.var!r}, {self.body!r})"


Quantifier = (Forall, Exists)
TRUE = And(())
FALSE = Or(())


def conj(parts: Iterable[Formula]) -> Formula:
    """Conjunction that drops the wrapper around a single conjunct."""
    parts = tuple(parts)
    return parts[0] if len(parts) == 1 else And(parts)


def disj(parts: Iterable[Formula]) -> Formula:
    parts = tuple(parts)
    return parts[0] if len(parts) == 1 else Or(parts)


def neq(left: Term, right: Term) -> Formula:
    return Not(Eq(left, right))


def children(f: Formula) -> Tuple[Formula, ...]:
    if isinstance(f, (Pred, Eq)):
        return ()
    if isinstance(f, Not):
        return (f.body,)
    if isinstance(f, (And, Or)):
        return f.args
    if isinstance(f, (Implies, Iff)):
        return (f.left, f.right)
    if isinstance(f, Quantifier):
        return (f.body,)
    raise TypeError(f"not a formula: {f!r}")


def walk(f: Formula) -> Iterator[Formula]:
    stack = [f]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(children(node)))


def terms(f: Formula) -> Iterator[Term]:
    for node in walk(f):
        if isinstance(node, Pred):
            yield from node.args
        elif isinstance(node, Eq):
            yield node.left
            yield node.right


def free_variables(f: Formula) -> FrozenSet[str]:
    if isinstance(f, Pred):
        return frozenset(t.name for t in f.args if isinstance(t, Var))
    if isinstance(f, Eq):
        return frozenset(t.name for t in (f.left, f.right) if isinstance(t, Var))
    if isinstance(f, Quantifier):
        return free_variables(f.body) - {f.var}
    out: Set[str] = set()
    for c in children(f):
        out |= free_variables(c)
    return frozenset(out)


def is_closed(f: Formula) -> bool:
    return not free_variables(f)


def names(f: Formula) -> FrozenSet[int]:
    return frozenset(t.index for t in terms(f) if isinstance(t, Name))


def predicates(f: Formula) -> Dict[str, int]:
    """Predicate symbols used in ``f`` with their arities (first use wins)."""
    out: Dict[str, int] = {}
    for node in walk(f):
        if isinstance(node, Pred):
            out.setdefault(node.name, len(node.args))
    return out


def substitute(f: Formula, mapping: Mapping[str, Term]) -> Formula:
    """Simultaneously replace free occurrences of variables.

    Replacement terms must not be captured by quantifiers of ``f``; callers
    only substitute names or variables not bound inside ``f``.
    """
    if not mapping:
        return f

    def term(t: Term) -> Term:
        return mapping.get(t.name, t) if isinstance(t, Var) else t

    if isinstance(f, Pred):
        return Pred(f.name, tuple(term(t) for t in f.args))
    if isinstance(f, Eq):
        return Eq(term(f.left), term(f.right))
    if isinstance(f, Not):
        return Not(substitute(f.body, mapping))
    if isinstance(f, And):
        return And(tuple(substitute(a, mapping) for a in f.args))
    if isinstance(f, Or):
        return Or(tuple(substitute(a, mapping) for a in f.args))
    if isinstance(f, Implies):
        return Implies(substitute(f.left, mapping), substitute(f.right, mapping))
    if isinstance(f, Iff):
        return Iff(substitute(f.left, mapping), substitute(f.right, mapping))
    if isinstance(f, Quantifier):
        inner = {k: v for k, v in mapping.items() if k != f.var}
        return type(f)(f.var, substitute(f.body, inner))
    raise TypeError(f"not a formula: {f!r}")


def replace_names(f: Formula, mapping: Mapping[int, Term]) -> Formula:
    """Replace names by terms (used to turn ``@ak`` into variables)."""

    def term(t: Term) -> Term:
        return mapping.get(t.index, t) if isinstance(t, Name) else t

    if isinstance(f, Pred):
        return Pred(f.name, tuple(term(t) for t in f.args))
    if isinstance(f, Eq):
        return Eq(term(f.left), term(f.right))
    if isinstance(f, Not):
        return Not(replace_names(f.body, mapping))
    if isinstance(f, (And, Or)):
        return type(f)(tuple(replace_names(a, mapping) for a in f.args))
    if isinstance(f, (Implies, Iff)):
        return type(f)(replace_names(f.left, mapping), replace_names(f.right, mapping))
    if isinstance(f, Quantifier):
        return type(f)(f.var, replace_names(f.body, mapping))
    raise TypeError(f"not a formula: {f!r}")


def size(f: Formula) -> int:
    return sum(1 for _ in walk(f))


# --- printing -----------------------------------------------------------------

# binding strength; quantifiers extend as far right as possible
_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5}
_ATOM = 6


def _prec(f: Formula) -> int:
    if isinstance(f, Quantifier):
        return 0
    return _PREC.get(type(f), _ATOM)


def _wrap(f: Formula, above: int) -> str:
    s = to_text(f)
    return f"({s})" if _prec(f) <= above else s


def to_text(f: Formula) -> str:
    """Render in the concrete grammar; ``parse(to_text(f)) == f``."""
    if isinstance(f, Pred):
        if not f.args:
            return f.name
        return f"{f.name}({', '.join(map(str, f.args))})"
    if isinstance(f, Eq):
        return f"{f.left} = {f.right}"
    if isinstance(f, Not):
        if isinstance(f.body, Eq):
            return f"{f.body.left} != {f.body.right}"
        return "~" + _wrap(f.body, _PREC[Not] - 1)
    if isinstance(f, And):
        if not f.args:
            return "true"
        return " & ".join(_wrap(a, _PREC[And]) for a in f.args)
    if isinstance(f, Or):
        if not f.args:
            return "false"
        return " | ".join(_wrap(a, _PREC[Or]) for a in f.args)
    if isinstance(f, Implies):
        # right-associative
        return f"{_wrap(f.left, _PREC[Implies])} -> {_wrap(f.right, _PREC[Implies] - 1)}"
    if isinstance(f, Iff):
        return f"{_wrap(f.left, _PREC[Iff])} <-> {_wrap(f.right, _PREC[Iff])}"
    if isinstance(f, Quantifier):
        kw = "forall" if isinstance(f, Forall) else "exists"
        return f"{kw} {f.var}. {to_text(f.body)}"
    raise TypeError(f"not a formula: {f!r}")
