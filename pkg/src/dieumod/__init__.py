"""Exact-arithmetic toolkit for rank-2 Dieudonne modules with real
multiplication: truncated Witt rings with a ramified top, the three module
invariants (Lie type, a-type, Newton polygon), the explicit families, the
a-type stratification combinatorics, and brute-force verification probes.
"""

from .wittring import (
    CoeffTower, WittElem, RamElem, PrecisionError, DomainError, INF,
    build_coeff_tower, frobenius, ord_pi, teichmuller,
)
from .modules import DModule, build_module
from .invariants import (
    NewtonPoint, LieType, AType, admissible_indices, slope_point,
    lie_type, a_type, a_index, newton_point, classify,
    a_type_bounds, dual_invariants, invariant_report,
)
from .strata import (
    admissible_slopes, newton_stratum_codim, is_spaced, spaced_bound,
    spaced_bound_exhaustive, atype_poset, ATypePoset, StratumRecord,
    dp_stratum_dim, deformation_dims, polarization_degree_exponent,
    superspecial_types, verify_det_identity,
)
from .families import (
    slope_family, normal_form, ordinary_module, superspecial,
    deform_specialize, nonrapoport_module, sample_deform,
)
from .hecke import (
    SmallField, HeckeSetting, StablePlane, build_setting,
    enumerate_stable_planes, compare_variety, probe_report,
)

__version__ = "0.1.0"
