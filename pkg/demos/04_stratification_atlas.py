"""The a-type stratification atlas.

A(e, f) = [0, e]^(Z/fZ) under the componentwise order indexes the strata of
the locus where the Lie algebra is free; the stratum of a-types >= a has
dimension g - |a|.  Spaced types (no two cyclically adjacent nonzero slots)
know their generic slope exactly; the others only a lower bound through
lambda(a), the largest spaced weight below a.
"""

from dieumod import (
    atype_poset, dp_stratum_dim, deformation_dims,
    polarization_degree_exponent, superspecial_types, newton_stratum_codim,
)
from fractions import Fraction

P = atype_poset(1, 4)  # e = 1, f = 4: the 16 a-types of a quartic field
print("A(1, 4): 16 strata, g = 4")
for a in P.elements:
    r = P.records[a]
    tag = f"= s({r.generic_slope_exact.index})" if r.spaced else \
        f">= s({r.generic_slope_lower.index})"
    print(f"  a = {a}: dim {r.dim}, lambda {r.lam}, generic slope {tag}")
print()

# DOT export for the Hasse diagram (pipe into graphviz if available)
print("Hasse diagram of A(1, 2):")
print(atype_poset(1, 2).to_dot())
print()

# Lie-type stratum dimensions: g - 2 sum min(e1, e2)
print("Lie stratum dims at e=2, f=2:",
      {"split": dp_stratum_dim([(0, 2), (0, 2)], 2, 2),
       "mixed": dp_stratum_dim([(0, 2), (1, 1)], 2, 2),
       "balanced^2": dp_stratum_dim([(1, 1), (1, 1)], 2, 2)})

# deformation dimensions: with a compatible pairing the tangent space drops
# from e*f + 2*sum min to e*f + sum min
print("deformation dims at the balanced e=2 point:",
      deformation_dims([(1, 1)], 2, 1))

# minimal quasi-polarization degree p^D for an unbalanced Lie type
D = polarization_degree_exponent([(1, 2), (0, 1)], 2, 2, normalize=False)
print("degree exponent for slot sums (3, 1):", D)

# superspecial tables: a-type = Lie type, constant (odd f) or alternating
print("superspecial patterns e=2, f=2:", superspecial_types(2, 2))

# Newton stratum codimension is the ceiling of the index
print("codims in S(5):",
      {str(m): newton_stratum_codim(5, m) for m in (0, 1, 2, Fraction(5, 2))})
