"""The Smith-form exponents over R = k[pi]/(pi^e) are cross-checked against
a brute-force oracle that literally enumerates the row-span subgroup of R^2
and reads the cokernel's pi-torsion filtration."""

import random
from itertools import product

import pytest

from dieumod.modp import ResidueField, PiPoly, smith_exponents


def _all_pipoly(field, e):
    els = list(field.elements())
    for combo in product(els, repeat=e):
        yield PiPoly(field, e, list(combo))


def brute_divisors(field, e, rows):
    """Exponents (v1 <= v2) with R^2/span = R/pi^v1 + R/pi^v2, found by
    enumerating the span and counting pi^j-torsion in the quotient."""
    p, d = field.p, field.d
    gens = []
    for row in rows:
        for s in field.elements():
            for j in range(e):
                pij = PiPoly(field, e, [field.zero()] * j + [s])
                gens.append((row[0] * pij, row[1] * pij))
    span = {(PiPoly.zero(field, e), PiPoly.zero(field, e))}
    changed = True
    while changed:
        changed = False
        for g in gens:
            for v in list(span):
                w = (v[0] + g[0], v[1] + g[1])
                if w not in span:
                    span.add(w)
                    changed = True
    all_elems = [(a, b) for a in _all_pipoly(field, e) for b in _all_pipoly(field, e)]
    killed = []
    for j in range(e + 1):
        if j == e:
            killed.append(len(all_elems) // len(span))
            continue
        pij = PiPoly(field, e, [field.zero()] * j + [field.one()])
        cnt = sum(1 for v in all_elems if (v[0] * pij, v[1] * pij) in span)
        killed.append(cnt // len(span))
    for v1, v2 in product(range(e + 1), repeat=2):
        if v1 <= v2 and all(killed[j] == p ** (d * (min(j, v1) + min(j, v2)))
                            for j in range(e + 1)):
            return [v1, v2]
    raise AssertionError("no divisor profile matched the brute-force data")


@pytest.mark.parametrize("e", [1, 2])
def test_smith_matches_bruteforce(e):
    field = ResidueField(3, [1, 1])  # F_3
    rng = random.Random(5)
    els = list(field.elements())
    for _ in range(25):
        rows = []
        for _ in range(rng.randrange(1, 4)):
            rows.append([PiPoly(field, e, [rng.choice(els) for _ in range(e)])
                         for _ in range(2)])
        got = smith_exponents([list(r) for r in rows], e)
        want = brute_divisors(field, e, rows)
        assert got == want, (rows, got, want)


def test_smith_basic_shapes():
    F = ResidueField(3, [1, 1])
    e = 2
    one = PiPoly(F, e, [F.one()])
    pi = PiPoly(F, e, [F.zero(), F.one()])
    zero = PiPoly.zero(F, e)
    assert smith_exponents([[zero, one]], e) == [0, 2]
    assert smith_exponents([[pi, zero], [zero, pi]], e) == [1, 1]
    assert smith_exponents([], e) == [2, 2]
    assert smith_exponents([[one, pi], [pi, one]], e) == [0, 0]


def test_residue_field_ops(rng):
    F = ResidueField(3, [2, 1, 1])  # primitive quadratic over F_3
    g = F.gen()
    assert g ** (F.order - 1) == F.one()
    for _ in range(40):
        x, y = F.random(rng), F.random(rng)
        assert (x + y) * (x + y) == x * x + 2 * (x * y) + y * y
        if x:
            assert x * x.inverse() == F.one()
    assert F.gen_pow(5) == g ** 5
    assert (g ** 3).frob() == (g.frob()) ** 3


def test_pipoly_inverse():
    F = ResidueField(3, [1, 1])
    e = 3
    u = PiPoly(F, e, [F.one(), F.elem(2), F.one()])
    assert u * u.inverse() == PiPoly(F, e, [F.one()])
