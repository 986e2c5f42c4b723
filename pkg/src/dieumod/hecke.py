"""Brute-force probe of the Hecke-correspondence geometry at the
non-Rapoport superspecial point.

The ambient space is the 4-dimensional mod-p Dieudonne space N with basis
(x1, x2, x1', x2'), pi x_i' = x_i, pi x_i = 0, F and V exchanging the primed
and unprimed pairs semilinearly, and the alternating form <x1, x2'> =
<x1', x2> = 1.  We enumerate all pi-, F-, V-stable isotropic planes, either
in the affine chart around span(x1, x2) or over the whole Lagrangian
Grassmannian, purely from the definitions, and compare the result with the
closed-form chart equations and the displayed coordinate variety

    k[t1, t2, t3] / (t1^(p+1) - t2^(p+1), t1^2 + t2 t3).

Field arithmetic is table-driven (q <= a few hundred) and numpy-vectorized,
so the p = 5 chart (q^4 = 390625 candidates) takes well under a minute.
"""

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import fppoly
from .wittring import DomainError


class SmallField:
    """F_q with integer-encoded elements (base-p digit vectors) and full
    numpy operation tables."""

    def __init__(self, p, r):
        self.p, self.r = p, r
        self.q = q = p ** r
        mu = fppoly.smallest_primitive(p, r)
        self.mu = mu
        enc = np.arange(q, dtype=np.int64)
        digits = [(enc // p ** i) % p for i in range(r)]
        add = np.zeros((q, q), dtype=np.int64)
        neg = np.zeros(q, dtype=np.int64)
        for i in range(r):
            add += ((digits[i][:, None] + digits[i][None, :]) % p) * p ** i
            neg += ((-digits[i]) % p) * p ** i
        self.ADD = add
        self.NEG = neg
        # exp/log through the primitive generator T
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        cur = [1]
        for k in range(q - 1):
            enc_k = sum(c * p ** i for i, c in enumerate(cur))
            exp[k] = enc_k
            log[enc_k] = k
            cur = fppoly.pmod(fppoly.pmul(cur, [0, 1], p), mu, p)
        self.EXP, self.LOG = exp, log
        mul = np.zeros((q, q), dtype=np.int64)
        idx = (log[1:, None] + log[None, 1:]) % (q - 1)
        mul[1:, 1:] = exp[idx]
        self.MUL = mul
        self.FROB = self._power_table(p)
        self.FROBINV = self._power_table(p ** (r - 1))

    def _power_table(self, n):
        out = np.zeros(self.q, dtype=np.int64)
        out[self.EXP] = self.EXP[(self.LOG[self.EXP] * n) % (self.q - 1)]
        return out

    def add(self, a, b):
        return self.ADD[a, b]

    def sub(self, a, b):
        return self.ADD[a, self.NEG[b]]

    def mul(self, a, b):
        return self.MUL[a, b]

    def neg(self, a):
        return self.NEG[a]

    def elements(self):
        return np.arange(self.q, dtype=np.int64)


@dataclass(frozen=True)
class StablePlane:
    rref: tuple  # 2x4 integer-encoded reduced row echelon matrix
    chart: tuple | None  # (t11, t12, t21, t22) when the plane is in the chart


class HeckeSetting:
    """Operators and pairing on the 4-dimensional space, over F_q, q = p^(2s)."""

    def __init__(self, p, s=1):
        if p == 2 or not fppoly.is_prime(p):
            raise DomainError("bad-shape", "p must be an odd prime")
        if s < 1:
            raise DomainError("bad-shape", "s must be >= 1")
        self.p, self.s = p, s
        self.field = SmallField(p, 2 * s)
        self.q = self.field.q
        self._self_check()

    def pi_map(self, v):
        """pi: x_i' -> x_i -> 0 on coordinate arrays (v0, v1, v2, v3)."""
        zero = np.zeros_like(v[0])
        return (v[2], v[3], zero, zero)

    def f_map(self, v):
        """F: semilinear (p-power) with x1' -> x2, x2' -> x1, x_i -> 0."""
        K = self.field
        zero = np.zeros_like(v[0])
        return (K.FROB[v[3]], K.FROB[v[2]], zero, zero)

    def v_map(self, v):
        """V: inverse-semilinear (p^(2s-1)-power) with x1' -> x2, x2' -> x1."""
        K = self.field
        zero = np.zeros_like(v[0])
        return (K.FROBINV[v[3]], K.FROBINV[v[2]], zero, zero)

    def pair(self, v, w):
        """<v, w> from <x1, x2'> = <x1', x2> = 1 (all other basis pairings 0)."""
        K = self.field
        t = K.sub(K.mul(v[0], w[3]), K.mul(v[3], w[0]))
        return K.add(t, K.sub(K.mul(v[2], w[1]), K.mul(v[1], w[2])))

    def _self_check(self):
        e = [tuple(np.int64(1 if i == j else 0) for i in range(4)) for j in range(4)]
        for v in e:
            pi2 = self.pi_map(self.pi_map(v))
            assert all(int(c) == 0 for c in pi2), "pi^2 != 0"
            fv = self.f_map(self.v_map(v))
            assert all(int(c) == 0 for c in fv), "F V != 0 mod p"
            vf = self.v_map(self.f_map(v))
            assert all(int(c) == 0 for c in vf), "V F != 0 mod p"
        assert int(self.pair(e[0], e[3])) == 1 and int(self.pair(e[2], e[1])) == 1


def _chart_masks(S):
    """Boolean mask over all q^4 chart points of the raw stability definition,
    together with the coordinate arrays."""
    K = S.field
    q = S.q
    e = K.elements()
    t11, t12, t21, t22 = [a.reshape(-1) for a in np.meshgrid(e, e, e, e, indexing="ij")]
    zero = np.zeros_like(t11)
    rows = ((np.ones_like(t11), zero, t11, t12),
            (zero, np.ones_like(t11), t21, t22))

    def member(v):
        # v lies in the span iff v - v0*row0 - v1*row1 = 0; the rows have an
        # identity block in the first two coordinates
        c0, c1 = v[0], v[1]
        m2 = K.sub(v[2], K.add(K.mul(c0, t11), K.mul(c1, t21)))
        m3 = K.sub(v[3], K.add(K.mul(c0, t12), K.mul(c1, t22)))
        return (m2 == 0) & (m3 == 0)

    mask = S.pair(rows[0], rows[1]) == 0
    for op in (S.pi_map, S.f_map, S.v_map):
        for r in rows:
            mask &= member(op(r))
    return mask, (t11, t12, t21, t22)


def enumerate_stable_planes(S, chart_only=True, size_cap=10 ** 7):
    """All pi-, F-, V-stable isotropic planes, verified from the raw
    definitions.  With chart_only the search runs over the affine chart
    around span(x1, x2); otherwise over the whole Grassmannian, reporting
    planes by their reduced row echelon form."""
    q = S.q
    if chart_only:
        if q ** 4 > size_cap:
            raise DomainError("size-guard", f"chart has {q ** 4} points > cap")
        mask, coords = _chart_masks(S)
        idx = np.nonzero(mask)[0]
        planes = []
        for i in idx:
            t = tuple(int(c[i]) for c in coords)
            rref = ((1, 0, t[0], t[1]), (0, 1, t[2], t[3]))
            planes.append(StablePlane(rref, t))
        return planes

    total = (q ** 2 + 1) * (q ** 2 + q + 1)
    if total > size_cap:
        raise DomainError("size-guard", f"Grassmannian has {total} planes > cap")
    K = S.field
    planes = []
    for j1, j2 in combinations(range(4), 2):
        free1 = [c for c in range(j1 + 1, 4) if c != j2]
        free2 = list(range(j2 + 1, 4))
        n1, n2 = len(free1), len(free2)
        grids = np.meshgrid(*([K.elements()] * (n1 + n2)), indexing="ij") \
            if n1 + n2 else []
        grids = [g.reshape(-1) for g in grids]
        count = grids[0].size if grids else 1
        ones = np.ones(count, dtype=np.int64)
        zeros = np.zeros(count, dtype=np.int64)
        r1 = [zeros.copy() for _ in range(4)]
        r2 = [zeros.copy() for _ in range(4)]
        r1[j1] = ones
        r2[j2] = ones
        for k, c in enumerate(free1):
            r1[c] = grids[k]
        for k, c in enumerate(free2):
            r2[c] = grids[n1 + k]
        r1, r2 = tuple(r1), tuple(r2)

        def member(v):
            c0, c1 = v[j1], v[j2]
            ok = np.ones(count, dtype=bool)
            for c in range(4):
                resid = K.sub(v[c], K.add(K.mul(c0, r1[c]), K.mul(c1, r2[c])))
                ok &= resid == 0
            return ok

        mask = S.pair(r1, r2) == 0
        for op in (S.pi_map, S.f_map, S.v_map):
            mask &= member(op(r1)) & member(op(r2))
        for i in np.nonzero(mask)[0]:
            rref = (tuple(int(r1[c][i]) for c in range(4)),
                    tuple(int(r2[c][i]) for c in range(4)))
            chart = None
            if j1 == 0 and j2 == 1:
                chart = (rref[0][2], rref[0][3], rref[1][2], rref[1][3])
            planes.append(StablePlane(rref, chart))
    return planes


def chart_equations_hold(S, t):
    """The six closed-form chart equations, checked pointwise."""
    K = S.field
    p = S.p
    t11, t12, t21, t22 = (np.int64(x) for x in t)

    def powp(x, n):
        return K.EXP[(K.LOG[x] * n) % (S.q - 1)] if int(x) else np.int64(0)

    eqs = [
        K.add(K.mul(t11, t11), K.mul(t12, t21)),                 # t11^2 + t12 t21
        K.mul(t12, K.add(t11, t22)),
        K.add(K.mul(t22, t22), K.mul(t12, t21)),                 # t22^2 + t12 t21
        K.mul(t21, K.add(t11, t22)),
        K.add(K.mul(powp(t11, p), t21), K.mul(powp(t12, p), t11)),
        K.add(K.mul(powp(t11, p), t22), powp(t12, p + 1)),
        K.add(powp(t21, p + 1), K.mul(powp(t22, p), t11)),
        K.add(K.mul(powp(t21, p), t22), K.mul(powp(t22, p), t12)),
        K.add(t11, t22),                                          # isotropy
    ]
    return all(int(v) == 0 for v in eqs)


def parametrized_chart_set(S):
    """{(t, a t, -t/a, -t) : t in F_q, a^(p+1) = 1} as a set of tuples."""
    K = S.field
    q, p = S.q, S.p
    roots = [int(K.EXP[k]) for k in range(0, q - 1, (q - 1) // (p + 1))]
    out = {(0, 0, 0, 0)}
    for a in roots:
        ainv = int(K.EXP[(-K.LOG[a]) % (q - 1)])
        for t in range(1, q):
            out.add((t, int(K.mul(np.int64(a), np.int64(t))),
                     int(K.NEG[K.mul(np.int64(ainv), np.int64(t))]),
                     int(K.NEG[np.int64(t)])))
    return out


def compare_variety(S, planes):
    """Project chart planes to (t1, t2, t3) = (t11, t12, t21), check the two
    displayed polynomials, count the variety's F_q-points independently, count
    lines through the origin, and report variety points missed by the
    enumeration."""
    K = S.field
    q, p = S.q, S.p
    chart_pts = [pl.chart for pl in planes if pl.chart is not None]
    projected = {(t[0], t[1], t[2]) for t in chart_pts}

    def powp(x, n):
        return K.EXP[(K.LOG[x] * n) % (q - 1)] if int(x) else np.int64(0)

    poly_ok = all(
        int(K.sub(powp(np.int64(t1), p + 1), powp(np.int64(t2), p + 1))) == 0
        and int(K.add(powp(np.int64(t1), 2), K.mul(np.int64(t2), np.int64(t3)))) == 0
        for t1, t2, t3 in projected)

    e = K.elements()
    T1, T2, T3 = [a.reshape(-1) for a in np.meshgrid(e, e, e, indexing="ij")]
    pow_p1 = np.zeros(q, dtype=np.int64)
    pow_p1[K.EXP] = K.EXP[(K.LOG[K.EXP] * (p + 1)) % (q - 1)]
    sq = K.MUL[e, e]
    variety = (K.sub(pow_p1[T1], pow_p1[T2]) == 0) & \
              (K.add(sq[T1], K.MUL[T2, T3]) == 0)
    variety_count = int(variety.sum())
    variety_pts = {(int(T1[i]), int(T2[i]), int(T3[i])) for i in np.nonzero(variety)[0]}
    extra = sorted(variety_pts - projected)

    lines = set()
    for t in chart_pts:
        if any(t):
            if t[0] == 0:
                lines.add(("degenerate", t))
                continue
            inv = K.EXP[(-K.LOG[np.int64(t[0])]) % (q - 1)]
            lines.add(tuple(int(K.mul(np.int64(x), inv)) for x in t))
    return {
        "p": p, "q": q,
        "enumerated": len(chart_pts),
        "expected_count": 1 + (p + 1) * (q - 1),
        "count_matches": len(chart_pts) == 1 + (p + 1) * (q - 1),
        "all_chart_equations_hold": all(chart_equations_hold(S, t) for t in chart_pts),
        "displayed_polynomials_hold": poly_ok,
        "lines_through_origin": len(lines),
        "expected_lines": p + 1,
        "parametrization_matches": set(chart_pts) == parametrized_chart_set(S),
        "variety_point_count": variety_count,
        "extra_variety_points": [list(t) for t in extra],
        "extra_points_on_t1_t2_zero": all(t[0] == 0 and t[1] == 0 for t in extra),
    }


def build_setting(p, s=1):
    return HeckeSetting(p, s)


def probe_report(p, s=1, full_grassmannian=False, size_cap=10 ** 7):
    """One-call report used by the command line front end."""
    S = build_setting(p, s)
    planes = enumerate_stable_planes(S, chart_only=True, size_cap=size_cap)
    report = compare_variety(S, planes)
    if full_grassmannian:
        allp = enumerate_stable_planes(S, chart_only=False, size_cap=size_cap)
        outside = [pl.rref for pl in allp if pl.chart is None]
        report["grassmannian_total"] = len(allp)
        report["outside_chart"] = [[list(r) for r in rr] for rr in outside]
    return report
