"""Prenex normal form.

Steps: remove ``->`` and ``<->``, push negations down to atoms, then pull
quantifiers to the front left to right.  Bound variables are renamed
``x1, x2, ...`` in the order the quantifiers come out, which also makes
the result rectified (every quantifier binds a distinct variable).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .syntax import (And, Eq, Exists, Forall, Formula, Iff, Implies, Not, Or, Pred, Quantifier, Var,
                     free_variables, substitute)

Prefix = List[Tuple[type, str]]


@dataclass(frozen=True)
class PrenexForm:
    """``prefix`` is outermost first; ``matrix`` is quantifier-free."""

    prefix: Tuple[Tuple[type, str], ...]
    matrix: Formula

    def to_formula(self) -> Formula:
        f = self.matrix
        for cls, var in reversed(self.prefix):
            f = cls(var, f)
        return f


def eliminate_arrows(f: Formula) -> Formula:
    if isinstance(f, (Pred, Eq)):
        return f
    if isinstance(f, Not):
        return Not(eliminate_arrows(f.body))
    if isinstance(f, (And, Or)):
        return type(f)(tuple(eliminate_arrows(a) for a in f.args))
    if isinstance(f, Implies):
        return Or((Not(eliminate_arrows(f.left)), eliminate_arrows(f.right)))
    if isinstance(f, Iff):
        a, b = eliminate_arrows(f.left), eliminate_arrows(f.right)
        return And((Or((Not(a), b)), Or((Not(b), a))))
    if isinstance(f, Quantifier):
        return type(f)(f.var, eliminate_arrows(f.body))
    raise TypeError(f"not a formula: {f!r}")


def negation_normal_form(f: Formula, negate: bool = False) -> Formula:
    """Push ``~`` onto atoms.  Expects a formula without arrows."""
    if isinstance(f, (Pred, Eq)):
        return Not(f) if negate else f
    if isinstance(f, Not):
        return negation_normal_form(f.body, not negate)
    if isinstance(f, (And, Or)):
        flip = {And: Or, Or: And}[type(f)] if negate else type(f)
        return flip(tuple(negation_normal_form(a, negate) for a in f.args))
    if isinstance(f, Quantifier):
        cls = type(f)
        if negate:
            cls = Exists if cls is Forall else Forall
        return cls(f.var, negation_normal_form(f.body, negate))
    if isinstance(f, (Implies, Iff)):
        return negation_normal_form(eliminate_arrows(f), negate)
    raise TypeError(f"not a formula: {f!r}")


def _pull(f: Formula, env: Dict[str, Var], fresh) -> Tuple[Prefix, Formula]:
    if isinstance(f, (Pred, Eq)):
        return [], substitute(f, env)
    if isinstance(f, Not):
        return [], substitute(f, env)
    if isinstance(f, Quantifier):
        new = next(fresh)
        prefix, matrix = _pull(f.body, {**env, f.var: Var(new)}, fresh)
        return [(type(f), new)] + prefix, matrix
    if isinstance(f, (And, Or)):
        prefix: Prefix = []
        parts = []
        for a in f.args:
            p, m = _pull(a, env, fresh)
            prefix += p
            parts.append(m)
        return prefix, type(f)(tuple(parts))
    raise TypeError(f"unexpected node after normalisation: {f!r}")


def prenex_form(f: Formula) -> PrenexForm:
    if free_variables(f):
        raise ValueError(f"prenex conversion needs a closed formula; free: {sorted(free_variables(f))}")
    nnf = negation_normal_form(eliminate_arrows(f))
    # temporary names cannot clash with user variables (they start with a digit)
    prefix, matrix = _pull(nnf, {}, (f"{i}tmp" for i in itertools.count()))
    final = {tmp: Var(f"x{i}") for i, (_, tmp) in enumerate(prefix, start=1)}
    return PrenexForm(tuple((cls, final[tmp].name) for cls, tmp in prefix), substitute(matrix, final))


def prenex(f: Formula) -> Formula:
    """Equivalent formula with all quantifiers in front (closed input)."""
    return prenex_form(f).to_formula()
