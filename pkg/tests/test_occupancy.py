import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from permstat.occupancy import (CellUnit, LevelSpec, MacrostateConstraint, SizeError, StatisticsKind,
                                arrangement_weight, count_arrangements, count_W_D, count_W_I,
                                enumerate_macrostates, enumerate_occupations, limit_ratio, reduced_volume,
                                reduced_volume_constrained)

from oracles import (macrostates_bruteforce, occupation_vectors_bruteforce, w_d_bruteforce, w_i_bruteforce)

D = StatisticsKind.DISTINGUISHABLE
RC = StatisticsKind.REDUCED_CLASSICAL
BE = StatisticsKind.BOSE_EINSTEIN
FD = StatisticsKind.FERMI_DIRAC
ALL = list(StatisticsKind)


def test_kind_aliases():
    assert StatisticsKind.parse("be") is BE
    assert StatisticsKind.parse("Fermi_Dirac") is FD
    assert StatisticsKind.parse("mb") is D
    with pytest.raises(ValueError):
        StatisticsKind.parse("parastatistics")


def test_enumerate_three_cells_two_bosons():
    assert enumerate_occupations(3, 2, BE) == [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]


def test_enumerate_fermions_filters_bosons():
    be = enumerate_occupations(3, 2, BE)
    assert enumerate_occupations(3, 2, FD) == [v for v in be if max(v) <= 1] == [(1, 1, 0), (1, 0, 1), (0, 1, 1)]


@pytest.mark.parametrize("kind", ALL)
def test_enumerate_no_particles(kind):
    assert enumerate_occupations(4, 0, kind) == [(0, 0, 0, 0)]


def test_enumerate_guard_reports_count():
    with pytest.raises(SizeError) as err:
        enumerate_occupations(30, 30, BE)
    assert err.value.count == math.comb(59, 30)


def test_enumerate_rejects_no_cells():
    with pytest.raises(ValueError):
        enumerate_occupations(0, 1, BE)


def test_count_examples():
    assert count_arrangements(3, 2, D) == 9
    assert count_arrangements(3, 2, BE) == 6
    assert count_arrangements(3, 2, RC) == 6
    assert count_arrangements(3, 2, FD) == 3
    assert count_arrangements(2, 5, FD) == 0


@pytest.mark.parametrize("cells", range(1, 8))
@pytest.mark.parametrize("particles", range(0, 8))
def test_counts_match_enumeration(cells, particles):
    vectors = occupation_vectors_bruteforce(cells, particles)
    fermions = occupation_vectors_bruteforce(cells, particles, exclusion=True)
    assert enumerate_occupations(cells, particles, BE) == vectors
    assert enumerate_occupations(cells, particles, FD) == fermions
    for kind in (BE, RC, D):
        assert len(enumerate_occupations(cells, particles, kind)) == len(vectors)
    assert count_arrangements(cells, particles, BE) == len(vectors)
    assert count_arrangements(cells, particles, RC) == len(vectors)
    assert count_arrangements(cells, particles, FD) == len(fermions)
    # distinguishable: sum of multinomial weights equals C^N
    assert sum(arrangement_weight(v, D) for v in vectors) == cells**particles == count_arrangements(cells, particles, D)
    # reduced weights sum to the reduced volume
    reduced = sum(arrangement_weight(v, RC) for v in vectors)
    assert reduced == Fraction(cells**particles, math.factorial(particles)) == reduced_volume(cells, particles)


def test_weights_examples():
    assert arrangement_weight((1, 1, 0), D) == 2
    assert arrangement_weight((2, 0, 0), D) == 1
    assert arrangement_weight((2, 0, 0), RC) == Fraction(1, 2)
    assert arrangement_weight((1, 1, 0), RC) == 1
    assert arrangement_weight((2, 0, 0), BE) == 1
    assert arrangement_weight((2, 0, 0), FD) == 0
    assert arrangement_weight((1, 0, 1), FD) == 1


def test_reduced_volume_examples():
    assert reduced_volume(3, 2) == Fraction(9, 2)
    assert reduced_volume(7, 1, CellUnit(Fraction(3, 5))) == Fraction(21, 5)
    assert reduced_volume(2, 3) == Fraction(4, 3)
    assert reduced_volume(3, 2, CellUnit(2)) == 18


def test_cell_unit_positive():
    with pytest.raises(ValueError):
        CellUnit(0)


@pytest.mark.parametrize("cells", range(1, 12))
def test_two_particle_space_splits(cells):
    assert count_arrangements(cells, 2, BE) + count_arrangements(cells, 2, FD) == cells**2


# --- energy levels --------------------------------------------------------------

SPEC_012 = LevelSpec.of((0, 1), (1, 1), (2, 1))


def test_macrostates_examples():
    assert enumerate_macrostates(SPEC_012, MacrostateConstraint(2, 2)) == [(1, 0, 1), (0, 2, 0)]
    assert enumerate_macrostates(SPEC_012, MacrostateConstraint(2, 7)) == []
    assert enumerate_macrostates(LevelSpec.of((1, 5)), MacrostateConstraint(3, 3)) == [(3,)]


def test_macrostate_guard():
    spec = LevelSpec.of(*[(0, 1)] * 6)
    with pytest.raises(SizeError):
        enumerate_macrostates(spec, MacrostateConstraint(20, 0), max_nodes=1000)


def test_w_examples():
    c = MacrostateConstraint(2, 2)
    assert count_W_D(SPEC_012, c) == 3
    assert count_W_I(SPEC_012, c) == 2
    spec = LevelSpec.of((0, 2), (1, 1))
    assert count_W_D(spec, MacrostateConstraint(2, 1)) == 4
    assert count_W_I(spec, MacrostateConstraint(2, 1)) == 2


@pytest.mark.parametrize("c, n", [(1, 3), (4, 2), (3, 5)])
def test_single_level_reduces_to_single_region(c, n):
    spec = LevelSpec.of((Fraction(3, 2), c))
    con = MacrostateConstraint(n, Fraction(3, 2) * n)
    assert count_W_D(spec, con) == c**n
    assert count_W_I(spec, con) == math.comb(n + c - 1, n)
    assert reduced_volume_constrained(spec, con) == Fraction(c**n, math.factorial(n))


def test_reduced_volume_constrained_examples():
    assert reduced_volume_constrained(SPEC_012, MacrostateConstraint(2, 2)) == Fraction(3, 2)
    assert reduced_volume_constrained(SPEC_012, MacrostateConstraint(2, 100)) == 0


def random_spec(rng):
    j = rng.randint(1, 4)
    energies = [Fraction(rng.randint(-2, 4), rng.choice([1, 1, 2])) for _ in range(j)]
    degeneracies = [rng.randint(1, 3) for _ in range(j)]
    n = rng.randint(0, 4)
    # pick a reachable energy most of the time
    if rng.random() < 0.85:
        e = sum(rng.choice(energies) for _ in range(n))
    else:
        e = Fraction(rng.randint(-5, 12), 2)
    return energies, degeneracies, n, e


@pytest.mark.parametrize("seed", range(60))
def test_level_counts_match_bruteforce(seed):
    rng = random.Random(seed)
    energies, degs, n, e = random_spec(rng)
    spec = LevelSpec.of(*zip(energies, degs))
    con = MacrostateConstraint(n, e)
    assert enumerate_macrostates(spec, con) == macrostates_bruteforce(energies, n, e)
    w_d = count_W_D(spec, con)
    assert w_d == w_d_bruteforce(energies, degs, n, e)
    assert count_W_I(spec, con) == w_i_bruteforce(energies, degs, n, e)
    tau = Fraction(rng.randint(1, 5), rng.randint(1, 3))
    assert reduced_volume_constrained(spec, con, CellUnit(tau)) == Fraction(w_d) * tau**n / math.factorial(n)


def test_limit_ratio_examples():
    assert limit_ratio(3, 2) == Fraction(4, 3)
    assert limit_ratio(17, 1) == 1
    assert limit_ratio(100, 2) == Fraction(101, 100)


@given(st.integers(1, 60), st.integers(0, 8))
def test_limit_ratio_closed_product(c, n):
    expected = Fraction(1)
    for i in range(1, n):
        expected *= 1 + Fraction(i, c)
    assert limit_ratio(c, n) == expected


@pytest.mark.parametrize("n", range(2, 8))
def test_limit_ratio_decreases_to_one(n):
    ratios = [limit_ratio(c, n) for c in range(1, 200)]
    assert all(a > b for a, b in zip(ratios, ratios[1:]))
    assert all(r >= 1 for r in ratios)
    for c, r in zip(range(1, 200), ratios):
        assert r - 1 <= Fraction(n * n, 2 * c) * r
