"""Entropy with and without the ``ln N!`` correction (k = 1, tau = 1).

A gas sample is ``N`` particles over ``C`` single-particle cells, with ``C``
standing in for the volume.  Uncorrected entropy is ``ln C**N``; the
corrected one is ``ln(C**N / N!)``.  Mixing two samples pools their cells
and particles.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, List, Sequence

from .exactnum import binomial, factorial, ln_exact


@dataclass(frozen=True)
class GasSample:
    particles: int
    cells: int
    species: Hashable = "gas"

    def __post_init__(self):
        if not isinstance(self.particles, int) or self.particles < 0:
            raise ValueError(f"particles must be an int >= 0, got {self.particles!r}")
        if not isinstance(self.cells, int) or self.cells < 1:
            raise ValueError(f"cells must be an int >= 1, got {self.cells!r}")


@dataclass(frozen=True)
class EntropyReport:
    uncorrected: float
    corrected: float


def _ln_count(particles: int, cells: int) -> float:
    # ln C**N without forming C**N
    return particles * ln_exact(cells) if particles else 0.0


def entropy(sample: GasSample, corrected: bool = True) -> float:
    s = _ln_count(sample.particles, sample.cells)
    if corrected:
        s -= ln_exact(factorial(sample.particles))
    return s


def entropy_report(sample: GasSample) -> EntropyReport:
    return EntropyReport(entropy(sample, corrected=False), entropy(sample, corrected=True))


def mixing_entropy(a: GasSample, b: GasSample, corrected: bool = True) -> float:
    """Entropy after pooling ``a`` and ``b`` minus the entropy before.

    The pooled system has ``C_a + C_b`` cells.  Same species: one gas of
    ``N_a + N_b`` particles.  Different species: each species spreads over
    the enlarged cell set on its own, so the ``N!`` factors cancel and the
    correction makes no difference.  The change is formed as one exact
    ratio of counts before taking the log.
    """
    cells = a.cells + b.cells
    n = a.particles + b.particles
    if n == 0:
        return 0.0
    ratio = Fraction(cells**n, a.cells**a.particles * b.cells**b.particles)
    if corrected and a.species == b.species:
        ratio /= binomial(n, a.particles)
    return ln_exact(ratio)


def mixing_entropy_per_particle(a: GasSample, b: GasSample, corrected: bool = True) -> float:
    n = a.particles + b.particles
    return mixing_entropy(a, b, corrected) / n if n else 0.0


def extensivity_defect(sample: GasSample, scale: int, corrected: bool = True) -> float:
    """``S(mN, mC) - m S(N, C)``."""
    if not isinstance(scale, int) or scale < 1:
        raise ValueError(f"scale must be an int >= 1, got {scale!r}")
    if scale == 1:
        return 0.0
    n = sample.particles
    if n == 0:
        return 0.0
    # exact ratio W(mN, mC) / W(N, C)**m, then one log
    ratio = Fraction(scale ** (scale * n))
    if corrected:
        ratio *= Fraction(factorial(n) ** scale, factorial(scale * n))
    return ln_exact(ratio)


def ehrenfest_trkal_correction(molecule_counts: Sequence[int], atom_total: int) -> float:
    """``ln(N*! / (N! N'! ...))`` for molecule counts ``N, N', ...``.

    Consistency between the molecule counts and ``atom_total`` is not
    checked; only the count structure enters.
    """
    counts = list(molecule_counts)
    if any(not isinstance(c, int) or c < 0 for c in counts):
        raise ValueError(f"molecule counts must be ints >= 0: {counts!r}")
    if not isinstance(atom_total, int) or atom_total < 0:
        raise ValueError(f"atom_total must be an int >= 0, got {atom_total!r}")
    denom = 1
    for c in counts:
        denom *= factorial(c)
    return ln_exact(Fraction(factorial(atom_total), denom))


def grand_canonical_limit(particles: int, reservoir_sizes: Iterable[int]) -> List[Fraction]:
    """``binomial(N*, N) N! / N*^N`` for each reservoir size ``N*``.

    This is the factor by which choosing ``N`` of ``N*`` particles differs
    from ``N*^N / N!``; it rises to 1 as ``N*`` grows.
    """
    if not isinstance(particles, int) or particles < 0:
        raise ValueError(f"particles must be an int >= 0, got {particles!r}")
    out = []
    for n_star in reservoir_sizes:
        if not isinstance(n_star, int) or n_star < particles or n_star < 1:
            raise ValueError(f"reservoir size {n_star!r} must be an int >= max(N, 1) = {max(particles, 1)}")
        out.append(Fraction(binomial(n_star, particles) * factorial(particles), n_star**particles))
    return out


def ground_state_entropy(particles: int, ground_degeneracy: int) -> float:
    """``N ln C0`` for distinguishable particles in a ``C0``-fold ground level."""
    if not isinstance(ground_degeneracy, int) or ground_degeneracy < 1:
        raise ValueError(f"ground degeneracy must be an int >= 1, got {ground_degeneracy!r}")
    if not isinstance(particles, int) or particles < 0:
        raise ValueError(f"particles must be an int >= 0, got {particles!r}")
    return particles * ln_exact(ground_degeneracy) if particles else 0.0


def stirling_ln_factorial(n: int) -> float:
    """Stirling series for ``ln n!`` (cross-check for large ``n``)."""
    if n < 2:
        return 0.0
    return n * math.log(n) - n + 0.5 * math.log(2 * math.pi * n) + 1 / (12 * n) - 1 / (360 * n**3)

