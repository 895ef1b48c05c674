"""Rewrite a sentence with only models of size N as ``exists x1..xN. G``,
``G`` totally symmetric in ``x1..xN``.

Construction, for a sentence ``T`` and cardinality ``N``:

1. Put ``T`` in prenex form ``Q1 x1 ... Qq xq . F``.
2. Working from the innermost quantifier outwards, replace ``Qk xk . H`` by
   the conjunction (for forall) or disjunction (for exists) of
   ``H[xk := @ai]`` over the names ``@a1 .. @aN``.  After ``q`` steps no
   variables remain; call the result ``G_N``.
3. ``A`` says the names are pairwise distinct and exhaust the universe.
4. ``G`` is ``G_N & A`` with every ``@ak`` replaced by ``xk``, and
   ``T_S = exists x1 ... exists xN . G``.

Under ``A`` each step is an equivalence, and ``G_N`` treats all names
alike, so permuting the ``xk`` in ``G`` only reorders conjuncts and
disjuncts.
"""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .parser import Signature
from .prenex import PrenexForm, prenex_form
from .semantics import satisfiable_cardinalities
from .syntax import (And, Eq, Exists, Forall, Formula, Name, Term, Var, conj, disj, free_variables, names, neq,
                     replace_names, substitute)

TOTALITY_VAR = "x"


class HypothesisError(ValueError):
    """The sentence has models of some size other than ``n``."""


class BoundedCheckWarning(UserWarning):
    """Only cardinalities up to a bound were examined."""


def _variables(n: int) -> List[str]:
    return [f"x{i}" for i in range(1, n + 1)]


def symmetrize_existential(matrix: Formula, n: int) -> Formula:
    """Disjunction of ``matrix`` over all permutations of ``x1..xn``.

    ``exists x1..xn. matrix`` and ``exists x1..xn. <result>`` are
    equivalent, and the result is symmetric in its free variables.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    variables = _variables(n)
    if free_variables(matrix) != set(variables):
        raise ValueError(
            f"matrix must have free variables exactly {', '.join(variables)}; "
            f"found {', '.join(sorted(free_variables(matrix))) or 'none'}")
    disjuncts = []
    for perm in itertools.permutations(range(n)):
        mapping = {variables[i]: Var(variables[perm[i]]) for i in range(n)}
        disjuncts.append(substitute(matrix, mapping))
    return disj(disjuncts)


def _a_clauses(n: int, terms: List[Term]) -> List[Formula]:
    distinct = [neq(terms[i], terms[j]) for i in range(n) for j in range(i + 1, n)]
    totality = Forall(TOTALITY_VAR, disj(Eq(Var(TOTALITY_VAR), t) for t in terms))
    return distinct + [totality]


def build_A(n: int) -> Formula:
    """``@ai != @aj`` for ``i < j``, and every element is some ``@ak``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return conj(_a_clauses(n, [Name(k) for k in range(1, n + 1)]))


@dataclass(frozen=True)
class Symmetrization:
    n: int
    prenex: PrenexForm
    stages: Tuple[Formula, ...]   # G^(1) .. G^(q), each a formula with names
    a: Formula
    t2: Formula
    g: Formula
    t_s: Formula
    cardinalities: Optional[frozenset] = None
    checked_up_to: Optional[int] = None

    @property
    def named_matrix(self) -> Formula:
        """``G^(q)``: the fully expanded matrix over the names."""
        return self.stages[-1] if self.stages else self.prenex.matrix


def expand_quantifiers(pf: PrenexForm, n: int) -> List[Formula]:
    """Stages ``G^(1)..G^(q)``: quantifiers replaced innermost first."""
    stages = []
    current = pf.matrix
    for cls, var in reversed(pf.prefix):
        instances = (substitute(current, {var: Name(i)}) for i in range(1, n + 1))
        current = conj(instances) if cls is Forall else disj(instances)
        stages.append(current)
    return stages


def symmetrize(t: Formula, n: int, check_max_size: Optional[int] = None,
               sig: Optional[Signature] = None) -> Symmetrization:
    """Build ``G`` and ``T_S`` for a sentence ``t`` whose models all have size ``n``.

    With ``check_max_size`` the size hypothesis is tested on all models up
    to that size first; :class:`HypothesisError` is raised if ``t`` has a
    model of another size.  Larger models stay unexamined and a
    :class:`BoundedCheckWarning` says so.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be an int >= 1")
    if free_variables(t):
        raise ValueError(f"t must be a sentence; free variables {sorted(free_variables(t))}")
    if names(t):
        raise ValueError("t must not contain names")

    cards = None
    if check_max_size is not None:
        cards = frozenset(satisfiable_cardinalities(t, check_max_size, sig))
        if cards - {n}:
            raise HypothesisError(
                f"sentence has models of size(s) {sorted(cards)} up to {check_max_size}, not only {n}")
        warnings.warn(
            f"cardinality hypothesis checked only for sizes 1..{check_max_size}; larger models unverified",
            BoundedCheckWarning, stacklevel=2)

    pf = prenex_form(t)
    stages = expand_quantifiers(pf, n)
    named = stages[-1] if stages else pf.matrix
    a = build_A(n)
    t2 = And((named, a))
    to_vars = {k: Var(v) for k, v in enumerate(_variables(n), start=1)}
    g = replace_names(conj([named] + _a_clauses(n, [Name(k) for k in range(1, n + 1)])), to_vars)
    t_s = g
    for v in reversed(_variables(n)):
        t_s = Exists(v, t_s)
    return Symmetrization(n, pf, tuple(stages), a, t2, g, t_s, cards, check_max_size)
