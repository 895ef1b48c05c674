"""Normalised distributions over occupation vectors, and a few worked cases.

The distinguishable and reduced-classical weights differ by the constant
factor ``N!``, so after normalisation they agree: classical particles,
reduced or not, obey Maxwell-Boltzmann statistics.  Bose-Einstein weights
are flat over occupation vectors and so favour coincident occupation.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Tuple

from .exactnum import binomial
from .occupancy import (
    MAX_ENUMERATION,
    OccupationVector,
    StatisticsKind,
    arrangement_weight,
    count_arrangements,
    enumerate_occupations,
    iter_occupations,
)


class EmptySupportError(ValueError):
    """Every occupation vector has zero weight (fermions with N > C)."""


@dataclass(frozen=True)
class OccupationDistribution:
    entries: Tuple[Tuple[OccupationVector, Fraction], ...]
    kind: StatisticsKind

    def __iter__(self) -> Iterator[Tuple[OccupationVector, Fraction]]:
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def as_dict(self) -> Dict[OccupationVector, Fraction]:
        return dict(self.entries)

    def probability(self, occ) -> Fraction:
        return self.as_dict().get(tuple(occ), Fraction(0))

    def total(self) -> Fraction:
        return sum((p for _, p in self.entries), Fraction(0))


def distribution(cells: int, particles: int, kind, limit: int = MAX_ENUMERATION) -> OccupationDistribution:
    """Exact probabilities of each occupation vector under ``kind``.

    Zero-weight vectors are left out, so fermionic distributions list only
    the vectors allowed by exclusion.
    """
    kind = StatisticsKind.parse(kind)
    vectors = enumerate_occupations(cells, particles, kind, limit=limit)
    weights = [arrangement_weight(v, kind) for v in vectors]
    total = sum(weights, Fraction(0))
    if total == 0:
        raise EmptySupportError(
            f"no admissible occupation vector for {particles} particles in {cells} cells ({kind.value})")
    entries = tuple((v, w / total) for v, w in zip(vectors, weights) if w)
    return OccupationDistribution(entries, kind)


def coincidence_probability(cells: int, particles: int, kind) -> Fraction:
    """Probability that some cell holds two or more particles."""
    dist = distribution(cells, particles, kind)
    return sum((p for v, p in dist if max(v, default=0) >= 2), Fraction(0))


def coins(kind) -> Dict[str, Fraction]:
    """Two coins over the faces H/T, keyed ``HH``, ``HT``, ``TT``."""
    out = {}
    for (h, t), p in distribution(2, 2, kind):
        out["H" * h + "T" * t] = p
    return out


@dataclass(frozen=True)
class HilbertDimensions:
    full: int
    symmetric: int
    antisymmetric: int
    particles: int = 2

    @property
    def mixed_symmetry(self) -> int:
        """Dimension outside the symmetric and antisymmetric subspaces.

        Zero for N <= 2 (for N <= 1 the two subspaces are the whole space).
        """
        if self.particles <= 1:
            return 0
        return self.full - self.symmetric - self.antisymmetric

    def __iter__(self):
        return iter((self.full, self.symmetric, self.antisymmetric))


def hilbert_dimensions(cells: int, particles: int) -> HilbertDimensions:
    """Dimensions of the N-fold tensor power of a ``cells``-dim space
    and of its totally symmetric and antisymmetric subspaces."""
    return HilbertDimensions(
        full=count_arrangements(cells, particles, StatisticsKind.DISTINGUISHABLE),
        symmetric=count_arrangements(cells, particles, StatisticsKind.BOSE_EINSTEIN),
        antisymmetric=binomial(cells, particles),
        particles=particles,
    )


@dataclass(frozen=True)
class LabeledSystem:
    """``labels`` particles, each carrying its own stable label, each with
    ``base_cells`` phases available."""

    base_cells: int
    labels: int

    def __post_init__(self):
        if not isinstance(self.base_cells, int) or self.base_cells < 1:
            raise ValueError(f"base_cells must be an int >= 1, got {self.base_cells!r}")
        if not isinstance(self.labels, int) or self.labels < 0:
            raise ValueError(f"labels must be an int >= 0, got {self.labels!r}")

    @property
    def particles(self) -> int:
        return self.labels

    def composite_cell(self, phase: int, label: int) -> int:
        # cells ordered phase-major: (H,r), (H,g), (T,r), (T,g)
        return phase * self.labels + label


@dataclass(frozen=True)
class LabelReduction:
    composite_cells: int
    reduced_count: int
    accessible_count: int

    def __iter__(self):
        return iter((self.composite_cells, self.reduced_count, self.accessible_count))


def _labels_distinct(occ: OccupationVector, system: LabeledSystem) -> bool:
    seen = [0] * system.labels
    for cell, n in enumerate(occ):
        seen[cell % system.labels] += n
    return all(s == 1 for s in seen)


def stable_label_reduction(system: LabeledSystem) -> LabelReduction:
    """Fold stable labels into the cells, then drop label-coincident states.

    Each composite cell is a (phase, label) pair.  Indistinguishable particles
    over the composite cells have the Bose-Einstein count; keeping only the
    occupation vectors in which every label is carried exactly once leaves
    ``base_cells**N`` states, the distinguishable count.
    """
    cells = system.base_cells * system.labels
    n = system.particles
    if cells == 0:
        return LabelReduction(0, 1, 1)
    reduced = count_arrangements(cells, n, StatisticsKind.BOSE_EINSTEIN)
    accessible = sum(1 for occ in iter_occupations(cells, n, StatisticsKind.BOSE_EINSTEIN)
                     if _labels_distinct(occ, system))
    return LabelReduction(cells, reduced, accessible)
