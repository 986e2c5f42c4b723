"""Rank-2 modules and their three invariants.

A module is given by f slot matrices A[i] over the ramified ring in the
convention (F X_{i-1}, F Y_{i-1})^T = A[i] (X_i, Y_i)^T; the Verschiebung is
always derived as sigma^(-1)(p A^(-1)), and an optional family of pairing
scalars delta[i] = (X_i, Y_i) satisfies det(A[i]) delta[i] = p sigma(delta[i-1]).
"""

from dieumod import (
    CoeffTower, DModule, lie_type, a_type, a_index, newton_point, classify,
    invariant_report, dual_invariants,
)
from dieumod.families import ordinary_module, nonrapoport_module, normal_form

t = CoeffTower(p=3, f=2, e=2, ext=2, N=4)

# The split ordinary module: A[i] = diag(1, pi^e), delta = 1.
M = ordinary_module(t)
print("ordinary module:")
print("  Lie type:", lie_type(M).pairs, " a-type:", a_type(M).pairs)
print("  a-index:", a_index(M))
print("  Newton point:", newton_point(M))
print("  flags:", classify(M))
print()

# The pi-swap module at e = 2, f = 1: F X = pi Y, F Y = pi X.  Its Lie
# algebra is killed by pi, so the Rapoport condition fails, yet it is
# superspecial (a-number = g) and supersingular.
t8 = CoeffTower(p=5, f=1, e=2, ext=2, N=4)
S = nonrapoport_module(t8)
print("pi-swap module:")
print("  Lie type:", lie_type(S).pairs, " a-type:", a_type(S).pairs)
print("  flags:", classify(S))
print()

# Duality: the dual module has A_dual = (p A^(-1))^T; the closed duality
# formulas predict its invariants from the original ones.
L, a = lie_type(S), a_type(S)
Ld, ad = dual_invariants(L, a)
D = S.dual()
print("dual of the pi-swap module:")
print("  predicted Lie/a-type:", Ld.pairs, ad.pairs)
print("  computed  Lie/a-type:", lie_type(D).pairs, a_type(D).pairs)
print()

# A Rapoport-locus normal form: slot 0 marked with Frobenius coefficient
# c * pi of valuation 2, the other slot split.
M2 = normal_form(t, (0,), {0: t.pi()})
rep = invariant_report(M2)
print("normal form with one marked slot:")
print("  a-type:", rep["a_type"], " a-index:", rep["a_index"],
      " reduced a-number:", rep["reduced_a_number"])
print("  Newton:", rep["newton"]["index_num"], "/", rep["newton"]["index_den"])

# A module straight from matrices, with validation: the identity matrix is
# rejected because its determinant carries no p at all.
try:
    DModule(t, [[[t.one(), t.zero()], [t.zero(), t.one()]]] * 2)
except Exception as exc:
    print("\nvalidation at work:", exc)
