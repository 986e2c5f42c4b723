"""A tour of the coefficient tower: F_{p^d} -> W_N(F_{p^d}) -> W_N[pi]/(pi^e - p).

Everything is exact: Witt vectors are polynomials over Z/p^N modulo a
Teichmuller modulus (so Frobenius is T -> T^p), and the ramified extension
adjoins a uniformizer pi with pi^e = p.
"""

from dieumod import CoeffTower, INF

# A tower with residue degree f = 2, ramification e = 2 over p = 3.
# N is the Witt length; the policy e*N >= e*f + 2 keeps every valuation
# up to g = e*f certifiable.
t = CoeffTower(p=3, f=2, e=2, ext=1, N=4)
print(t)
print("working residue field:", t.residue_field)
print("modulus over Z/3^4:", list(t.modulus))
print("its reduction mod 3 is primitive, so the residue of T generates F_9^*")
print()

# The residue of T is a Teichmuller element: T^(q-1) = 1 exactly.
T = t.witt_gen()
print("T^(q-1) =", (T ** (t.q - 1)).coeffs)

# Frobenius is a ring endomorphism fixing Z/p^N, with sigma(T) = T^p.
print("sigma(T) =", T.sigma().coeffs, "and sigma^2(T) == T:", T.sigma(2) == T)

# Teichmuller lifts are the unique multiplicative section of reduction mod p.
F = t.residue_field
a = F.gen() + F.one()
ta = t.teichmuller(a)
print("teichmuller(gen + 1) =", ta.coeffs, "reduces back:", ta.residue() == a)
tm1 = t.teichmuller(F.elem(2))
print("teichmuller(-1) =", tm1.coeffs, "(it is its own lift: -1 mod 81 = 80)")
print()

# The ramified layer: pi-adic valuations are exact because the monomials
# pi^j have pairwise distinct valuations e*l + j.
pi = t.pi()
print("ord(pi) =", pi.ord_pi(), " ord(p) =", t.ram(3).ord_pi(),
      " ord(p + pi) =", (t.ram(3) + pi).ord_pi())
print("ord(0) =", t.zero().ord_pi(), "(the infinity marker: >= e*N)")

# Division by pi is exact but costs one certified digit.
x = t.pi_pow(3)
y = x.div_pi(2)
print("pi^3 / pi^2 has", y.prec, "certified digits out of", t.pi_precision)

# Units invert by Newton iteration.
u = t.one() + pi
print("(1 + pi) * (1 + pi)^(-1) == 1:", u * u.inverse() == t.one())
