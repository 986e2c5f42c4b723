"""Slope formulas and the explicit family realizing every Newton point.

The Newton point of a rank-2 module with real multiplication is s(i) for
i in S(g) = {0, 1, ..., floor(g/2)} u {g/2}; the fast method reads i off
the trace valuation of the one-slot F^f matrix, the oracle brackets it by
iterated twisted powers.  Both agree on all constructed families.
"""

from dieumod import CoeffTower, newton_point, admissible_slopes
from dieumod.families import slope_family, normal_form

# Every admissible integer index is realized by an explicit family.
print("g = 6 (f = 3, e = 2):", [str(s) for s in admissible_slopes(6)])
t = CoeffTower(3, 3, 2, 1, 42)  # generous precision for the oracle
for a in range(0, 4):
    M = slope_family(t, a)
    fast = newton_point(M, "fast")
    oracle = newton_point(M, "oracle")
    print(f"  slope_family(a={a}): fast {fast}, oracle {oracle}")
print()

# One marked slot: the index is min(g/2, ord of the Frobenius coefficient).
t2 = CoeffTower(3, 1, 3, 2, 4)  # g = 3
print("g = 3, one marked slot:")
for w in (1, 2, 3):
    M = normal_form(t2, (0,), {0: t2.pi_pow(w - 1)})  # coefficient pi^w
    print(f"  coefficient valuation {w}: {newton_point(M)}")
M = normal_form(t2, (0,), {0: t2.zero()})
print(f"  coefficient 0 (supersingular): {newton_point(M)}")
print()

# Two marked slots at distance l2 <= l1: index min(g/2, ord(u1 u2 + pi^(e l2))).
t4 = CoeffTower(3, 4, 1, 2, 8)  # g = 4
print("g = 4, marked slots {0, 2} (gaps 2 and 2, so e*l2 = 2 = g/2):")
for w1, w2 in ((1, 1), (1, 2)):
    c = {0: t4.pi_pow(w1 - 1), 2: t4.pi_pow(w2 - 1)}
    M = normal_form(t4, (0, 2), c)
    print(f"  coefficient valuations ({w1}, {w2}): {newton_point(M)}")
print("g = 4, adjacent marked slots {0, 1} (e*l2 = 1 wins over ord(u1 u2) >= 2):")
for w1, w2 in ((1, 1), (2, 1)):
    c = {0: t4.pi_pow(w1 - 1), 1: t4.pi_pow(w2 - 1)}
    M = normal_form(t4, (0, 1), c)
    print(f"  coefficient valuations ({w1}, {w2}): {newton_point(M)}")

# With both coefficients zero the gaps decide: alternating gap sums (2, 2)
# give the supersingular index 2.
M = normal_form(t4, (0, 2), {0: t4.zero(), 2: t4.zero()})
print(f"  slots {{0, 2}}, both coefficients 0: {newton_point(M)}")
