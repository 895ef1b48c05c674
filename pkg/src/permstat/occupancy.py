"""Counting and enumerating arrangements of particles over cells.

Two settings are covered:

* a single region of ``C`` cells holding ``N`` particles, and
* several energy levels, level ``k`` having energy ``E_k`` and ``C_k`` cells,
  with the total particle number and total energy fixed.

Each has a count for distinguishable particles (assignments of labelled
particles to cells) and for indistinguishable ones (occupation vectors),
plus the reduced phase-space volume that sits between the two.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple, Union

from .exactnum import as_fraction, binomial, factorial, multinomial

MAX_ENUMERATION = 10**7
MAX_SEARCH_NODES = 10**7


class SizeError(ValueError):
    """An enumeration would exceed its guard.

    ``count`` is the exact number of items (or a lower bound on explored
    nodes) that triggered the guard.
    """

    def __init__(self, message: str, count: int):
        super().__init__(message)
        self.count = count


class StatisticsKind(enum.Enum):
    DISTINGUISHABLE = "distinguishable"
    REDUCED_CLASSICAL = "reduced-classical"
    BOSE_EINSTEIN = "bose-einstein"
    FERMI_DIRAC = "fermi-dirac"

    @classmethod
    def parse(cls, text: Union[str, "StatisticsKind"]) -> "StatisticsKind":
        if isinstance(text, cls):
            return text
        key = text.strip().lower().replace("_", "-")
        try:
            return _KIND_ALIASES[key]
        except KeyError:
            choices = ", ".join(sorted(_KIND_ALIASES))
            raise ValueError(f"unknown statistics {text!r}; expected one of {choices}") from None


_KIND_ALIASES = {
    "distinguishable": StatisticsKind.DISTINGUISHABLE,
    "mb": StatisticsKind.DISTINGUISHABLE,
    "maxwell-boltzmann": StatisticsKind.DISTINGUISHABLE,
    "reduced-classical": StatisticsKind.REDUCED_CLASSICAL,
    "reduced": StatisticsKind.REDUCED_CLASSICAL,
    "rc": StatisticsKind.REDUCED_CLASSICAL,
    "bose-einstein": StatisticsKind.BOSE_EINSTEIN,
    "be": StatisticsKind.BOSE_EINSTEIN,
    "fermi-dirac": StatisticsKind.FERMI_DIRAC,
    "fd": StatisticsKind.FERMI_DIRAC,
}


OccupationVector = Tuple[int, ...]


@dataclass(frozen=True)
class Level:
    energy: Fraction
    degeneracy: int

    def __post_init__(self):
        object.__setattr__(self, "energy", as_fraction(self.energy))
        if not isinstance(self.degeneracy, int) or self.degeneracy < 1:
            raise ValueError(f"degeneracy must be an int >= 1, got {self.degeneracy!r}")


@dataclass(frozen=True)
class LevelSpec:
    levels: Tuple[Level, ...]

    def __post_init__(self):
        levels = tuple(lv if isinstance(lv, Level) else Level(*lv) for lv in self.levels)
        if not levels:
            raise ValueError("a LevelSpec needs at least one level")
        object.__setattr__(self, "levels", levels)

    @classmethod
    def of(cls, *pairs) -> "LevelSpec":
        """``LevelSpec.of((0, 1), (1, 2))`` -- (energy, degeneracy) pairs."""
        return cls(tuple(Level(e, c) for e, c in pairs))

    @property
    def energies(self) -> Tuple[Fraction, ...]:
        return tuple(lv.energy for lv in self.levels)

    @property
    def degeneracies(self) -> Tuple[int, ...]:
        return tuple(lv.degeneracy for lv in self.levels)

    def __len__(self):
        return len(self.levels)


@dataclass(frozen=True)
class MacrostateConstraint:
    n_total: int
    e_total: Fraction

    def __post_init__(self):
        if not isinstance(self.n_total, int) or self.n_total < 0:
            raise ValueError(f"n_total must be an int >= 0, got {self.n_total!r}")
        object.__setattr__(self, "e_total", as_fraction(self.e_total))


@dataclass(frozen=True)
class CellUnit:
    """Phase-space volume of one single-particle cell."""

    tau: Fraction = Fraction(1)

    def __post_init__(self):
        tau = as_fraction(self.tau)
        if tau <= 0:
            raise ValueError(f"cell volume must be positive, got {tau}")
        object.__setattr__(self, "tau", tau)


def _check_cells(cells: int) -> None:
    if not isinstance(cells, int) or cells < 1:
        raise ValueError(f"need at least one cell, got {cells!r}")


def _check_particles(particles: int) -> None:
    if not isinstance(particles, int) or particles < 0:
        raise ValueError(f"particle number must be an int >= 0, got {particles!r}")


# --- single region ----------------------------------------------------------


def count_arrangements(cells: int, particles: int, kind) -> int:
    """Number of distinct arrangements of ``particles`` over ``cells``.

    Distinguishable particles give ``C**N``; indistinguishable ones give the
    number of occupation vectors, ``(N+C-1)!/(N!(C-1)!)``, or ``binomial(C, N)``
    under exclusion.
    """
    _check_cells(cells)
    _check_particles(particles)
    kind = StatisticsKind.parse(kind)
    if kind is StatisticsKind.DISTINGUISHABLE:
        return cells**particles
    if kind is StatisticsKind.FERMI_DIRAC:
        return binomial(cells, particles)
    return binomial(particles + cells - 1, particles)


def _compositions(cells: int, particles: int, cap: int) -> Iterator[OccupationVector]:
    # lexicographically descending: first cell takes as many as it can
    if cells == 1:
        if particles <= cap:
            yield (particles,)
        return
    for first in range(min(particles, cap), -1, -1):
        for rest in _compositions(cells - 1, particles - first, cap):
            yield (first,) + rest


def iter_occupations(cells: int, particles: int, kind) -> Iterator[OccupationVector]:
    """Lazy version of :func:`enumerate_occupations` (no size guard)."""
    _check_cells(cells)
    _check_particles(particles)
    kind = StatisticsKind.parse(kind)
    cap = 1 if kind is StatisticsKind.FERMI_DIRAC else particles
    return _compositions(cells, particles, cap)


def enumerate_occupations(cells: int, particles: int, kind, limit: int = MAX_ENUMERATION) -> List[OccupationVector]:
    """All occupation vectors, lexicographically descending.

    Raises :class:`SizeError` if more than ``limit`` vectors would be produced.
    """
    kind = StatisticsKind.parse(kind)
    if kind is StatisticsKind.FERMI_DIRAC:
        n = count_arrangements(cells, particles, kind)
    else:
        n = count_arrangements(cells, particles, StatisticsKind.BOSE_EINSTEIN)
    if n > limit:
        raise SizeError(f"enumeration would produce {n} occupation vectors (limit {limit})", n)
    return list(iter_occupations(cells, particles, kind))


def arrangement_weight(occ: Sequence[int], kind) -> Fraction:
    """Unnormalised statistical weight of one occupation vector.

    ========================  =====================
    distinguishable           ``N!/prod(n_k!)``
    reduced-classical         ``1/prod(n_k!)``
    bose-einstein             ``1``
    fermi-dirac               ``1`` if all ``n_k <= 1`` else ``0``
    ========================  =====================
    """
    kind = StatisticsKind.parse(kind)
    if any((not isinstance(n, int)) or n < 0 for n in occ):
        raise ValueError(f"occupation numbers must be ints >= 0: {occ!r}")
    if kind is StatisticsKind.DISTINGUISHABLE:
        return Fraction(multinomial(occ))
    if kind is StatisticsKind.REDUCED_CLASSICAL:
        return Fraction(1, math.prod(factorial(n) for n in occ))
    if kind is StatisticsKind.BOSE_EINSTEIN:
        return Fraction(1)
    return Fraction(int(all(n <= 1 for n in occ)))


def reduced_volume(cells: int, particles: int, unit: CellUnit = CellUnit()) -> Fraction:
    """``(C tau)**N / N!``: the phase-space volume divided by ``N!``."""
    _check_cells(cells)
    _check_particles(particles)
    return Fraction((cells * unit.tau) ** particles) / factorial(particles)


def limit_ratio(cells: int, particles: int) -> Fraction:
    """Bose-Einstein count over ``C**N/N!``.

    Equals ``prod_{i<N} (1 + i/C)`` and tends to 1 when ``C >> N``.
    """
    _check_cells(cells)
    _check_particles(particles)
    be = count_arrangements(cells, particles, StatisticsKind.BOSE_EINSTEIN)
    return Fraction(be * factorial(particles), cells**particles)


# --- energy levels ------------------------------------------------------------


def iter_macrostates(spec: LevelSpec, constraint: MacrostateConstraint,
                     max_nodes: int = MAX_SEARCH_NODES) -> Iterator[Tuple[int, ...]]:
    """Depth-first search for level populations meeting both constraints.

    Populations come out lexicographically descending.  A branch is cut as
    soon as the remaining particles cannot reach the remaining energy with
    the levels still unassigned.
    """
    energies = spec.energies
    j = len(energies)
    # bounds on energy reachable per particle using levels k..j-1
    lo = [min(energies[k:]) for k in range(j)]
    hi = [max(energies[k:]) for k in range(j)]
    target = constraint.e_total
    nodes = 0
    populations = [0] * j

    def search(k: int, left: int, energy_left: Fraction) -> Iterator[Tuple[int, ...]]:
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise SizeError(f"macrostate search exceeded {max_nodes} nodes", nodes)
        if k == j - 1:
            if left * energies[k] == energy_left:
                populations[k] = left
                yield tuple(populations)
            return
        if not (left * lo[k] <= energy_left <= left * hi[k]):
            return
        for n in range(left, -1, -1):
            populations[k] = n
            yield from search(k + 1, left - n, energy_left - n * energies[k])
        populations[k] = 0

    return search(0, constraint.n_total, target)


def enumerate_macrostates(spec: LevelSpec, constraint: MacrostateConstraint,
                          max_nodes: int = MAX_SEARCH_NODES) -> List[Tuple[int, ...]]:
    return list(iter_macrostates(spec, constraint, max_nodes))


def count_W_D(spec: LevelSpec, constraint: MacrostateConstraint) -> int:
    """Distinguishable arrangements under fixed ``N_tot`` and ``E_tot``."""
    total = 0
    for pops in iter_macrostates(spec, constraint):
        term = multinomial(pops)
        for n, c in zip(pops, spec.degeneracies):
            term *= c**n
        total += term
    return total


def count_W_I(spec: LevelSpec, constraint: MacrostateConstraint) -> int:
    """Indistinguishable (Bose-Einstein) arrangements under the same constraints."""
    total = 0
    for pops in iter_macrostates(spec, constraint):
        term = 1
        for n, c in zip(pops, spec.degeneracies):
            term *= binomial(n + c - 1, n)
        total += term
    return total


def reduced_volume_constrained(spec: LevelSpec, constraint: MacrostateConstraint,
                               unit: CellUnit = CellUnit()) -> Fraction:
    """Sum over macrostates of ``prod (C_k tau)**N_k / N_k!``.

    This equals ``count_W_D * tau**N_tot / N_tot!``.  It is a volume, not a
    count, and in general not an integer.
    """
    total = Fraction(0)
    for pops in iter_macrostates(spec, constraint):
        term = Fraction(1)
        for n, c in zip(pops, spec.degeneracies):
            term *= Fraction((c * unit.tau) ** n) / factorial(n)
        total += term
    return total
