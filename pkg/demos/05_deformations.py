"""Universal deformations, specialization, and Newton strata in coordinates.

Over a normal-form base the universal deformation of the stratum of a-types
>= target has one coordinate t_{i,j} per slot i and window index
target[i] <= j < e; specializing them at Teichmuller scalars produces
honest modules whose Newton points we can read off exactly.
"""

import random

from dieumod import CoeffTower, newton_point, classify
from dieumod.families import normal_form, deform_specialize, sample_deform

rng = random.Random(11)

# One marked slot with vanishing coefficient over g = 4: flattening the
# coordinates as k = e*i + j, the stratum of Newton index >= m is exactly
# t_0 = ... = t_(m-1) = 0, and a unit at t_m lands exactly on s(m).
t = CoeffTower(3, 2, 2, 2, 4)
base = normal_form(t, (0,), {0: t.zero()})
F = t.residue_field
print("Newton strata in flattened coordinates (g = 4):")
for m in range(3):
    asg = {(i, j): (F.one() if 2 * i + j == m else F.zero())
           for i in range(2) for j in range(2)}
    M = deform_specialize(base, (0, 0), asg)
    print(f"  t_0..t_{m - 1} = 0, t_{m} = 1  ->  {newton_point(M)}")
print()

# The non-ordinary locus is cut out by the product of the leading
# coordinates over the marked slots.
asg = {(i, j): F.random_unit(rng) for i in range(2) for j in range(2)}
M = deform_specialize(base, (0, 0), asg)
print("all leading coordinates units -> ordinary:", classify(M)["ordinary"])
asg[(0, 0)] = F.zero()
M = deform_specialize(base, (0, 0), dict(asg))
print("zero the marked leading coordinate -> ordinary:", classify(M)["ordinary"])
print()

# Sampling over a spaced stratum: the generic Newton index is |target|.
t2 = CoeffTower(3, 4, 1, 4, 6)
out = sample_deform(t2, (0, 2), (1, 0, 1, 0), trials=60, rng=rng)
print("60 random specializations over the spaced stratum (1,0,1,0), g = 4:")
print("  slope histogram:", out["slope_histogram"])
