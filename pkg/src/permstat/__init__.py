"""Exact counting for distinguishable and indistinguishable particles.

Submodules: :mod:`~permstat.exactnum`, :mod:`~permstat.occupancy`,
:mod:`~permstat.ensembles`, :mod:`~permstat.thermo`, :mod:`~permstat.folsym`
and the command line in :mod:`~permstat.cli`.
"""
from .exactnum import binomial, factorial, format_exact, ln_exact, multinomial
from .occupancy import (CellUnit, LevelSpec, MacrostateConstraint, SizeError, StatisticsKind, arrangement_weight,
                        count_arrangements, count_W_D, count_W_I, enumerate_macrostates, enumerate_occupations,
                        limit_ratio, reduced_volume, reduced_volume_constrained)
from .ensembles import (EmptySupportError, LabeledSystem, OccupationDistribution, coincidence_probability, coins,
                        distribution, hilbert_dimensions, stable_label_reduction)
from .thermo import (GasSample, entropy, extensivity_defect, ehrenfest_trkal_correction, grand_canonical_limit,
                     ground_state_entropy, mixing_entropy, mixing_entropy_per_particle)

__version__ = "0.1.0"
