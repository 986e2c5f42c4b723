"""Rank-2 Dieudonne modules with real-multiplication structure.

A module is presented by f slot matrices A[0..f-1] over the ramified ring,
in the convention

    (F X_{i-1}, F Y_{i-1})^T  =  A[i] (X_i, Y_i)^T   (slot indices mod f),

so A[i] expands F of the slot-(i-1) basis in the slot-i basis, and F^f on a
single slot is a sigma-twisted product of the A[i].  V is never stored: its
matrix from slot i to slot i-1 is sigma^{-1}(p A[i]^{-1}), which makes
FV = VF = p automatic.

An optional family of pairing scalars delta[i] = (X_i, Y_i) pins the
alternating form; compatibility with F and V forces

    det(A[i]) * delta[i] = p * sigma(delta[i-1]).
"""

import json
from .wittring import RamElem, PrecisionError, DomainError, INF


def mat(tower, rows):
    return tuple(tuple(tower.ram(x) for x in row) for row in rows)


def mat_mul(A, B):
    return (
        (A[0][0] * B[0][0] + A[0][1] * B[1][0], A[0][0] * B[0][1] + A[0][1] * B[1][1]),
        (A[1][0] * B[0][0] + A[1][1] * B[1][0], A[1][0] * B[0][1] + A[1][1] * B[1][1]),
    )


def mat_sigma(A, n):
    return tuple(tuple(x.sigma(n) for x in row) for row in A)


def mat_adj(A):
    return ((A[1][1], -A[0][1]), (-A[1][0], A[0][0]))


def mat_det(A):
    return A[0][0] * A[1][1] - A[0][1] * A[1][0]


def mat_transpose(A):
    return ((A[0][0], A[1][0]), (A[0][1], A[1][1]))


def mat_scale(A, c):
    return tuple(tuple(x * c for x in row) for row in A)


def mat_min_ord_lower(A):
    return min(x.ord_lower() for row in A for x in row)


def mat_mod_p(A):
    return tuple(tuple(x.residue_poly() for x in row) for row in A)


class DModule:
    """Validated module presentation; immutable once built."""

    def __init__(self, tower, matrices, delta=None, mode="separable"):
        self.tower = tower
        if len(matrices) != tower.f:
            raise DomainError("bad-shape", f"expected {tower.f} slot matrices")
        self.matrices = tuple(mat(tower, m) for m in matrices)
        self.delta = None if delta is None else tuple(tower.ram(d) for d in delta)
        if mode not in ("separable", "general"):
            raise DomainError("bad-shape", "mode must be 'separable' or 'general'")
        self.mode = mode
        self.det_orders = []
        for i, A in enumerate(self.matrices):
            d = mat_det(A)
            v = d.ord_pi()
            if v is INF:
                raise DomainError("degenerate", f"det A[{i}] vanishes to working precision",
                                  slot=i)
            adj_min = min(x.ord_lower() for row in mat_adj(A) for x in row)
            if adj_min + tower.e < v:
                # ord_lower is a certified lower bound, so a failure with an
                # uncertified entry is a precision problem, not a bad module
                min(x.ord_pi() for row in mat_adj(A) for x in row)
                raise DomainError(
                    "v-nonintegral",
                    f"slot {i}: p*A^(-1) is not integral "
                    f"(min adjugate valuation {adj_min}, det valuation {v})",
                    slot=i)
            self.det_orders.append(v)
        self.det_sum = sum(self.det_orders)
        g = tower.g
        if mode == "separable" and self.det_sum != g:
            raise DomainError(
                "det-budget",
                f"sum of det valuations is {self.det_sum}, expected g = {g} "
                f"(slot valuations {self.det_orders})")
        if mode == "general" and self.det_sum > 2 * g:
            raise DomainError(
                "det-budget",
                f"sum of det valuations {self.det_sum} exceeds 2g = {2 * g}")
        if self.delta is not None:
            p = tower.p
            for i, A in enumerate(self.matrices):
                if not self.delta[i]:
                    raise DomainError("degenerate-pairing",
                                      f"pairing scalar at slot {i} vanishes", slot=i)
                lhs = mat_det(A) * self.delta[i]
                rhs = self.delta[(i - 1) % tower.f].sigma() * p
                if lhs - rhs:
                    raise DomainError(
                        "pairing-incompatible",
                        f"slot {i}: det(A)*delta != p*sigma(delta_prev)", slot=i)

    @property
    def f(self):
        return self.tower.f

    @property
    def e(self):
        return self.tower.e

    @property
    def g(self):
        return self.tower.g

    def __repr__(self):
        return (f"DModule(p={self.tower.p}, f={self.f}, e={self.e}, "
                f"mode={self.mode}, det_orders={self.det_orders})")

    # -- F^f and its iterates ------------------------------------------------

    def twisted_power(self, base_slot=0):
        """Matrix of F^f on slot `base_slot`:
        A[b+1]^(sigma^(f-1)) * A[b+2]^(sigma^(f-2)) * ... * A[b+f]."""
        f = self.f
        B = None
        for k in range(1, f + 1):
            Ak = mat_sigma(self.matrices[(base_slot + k) % f], f - k)
            B = Ak if B is None else mat_mul(B, Ak)
        return B

    def iterate_twisted(self, n, base_slot=0):
        """Minimal entry valuation of the matrix of F^(f*n) on `base_slot`.

        Raises PrecisionError (with the certified lower bound attached) when
        every entry vanishes to working precision.
        """
        if n < 1:
            raise DomainError("bad-shape", "n must be >= 1")
        B = self.twisted_power(base_slot)
        C = B
        for _ in range(n - 1):
            C = mat_mul(mat_sigma(C, self.f), B)
        return self._min_entry_ord(C, n)

    def _min_entry_ord(self, C, n):
        vals = [x.ord_lower() for row in C for x in row]
        m = min(vals)
        if all(not x for row in C for x in row):
            raise PrecisionError(
                f"all entries of the {n}-fold twisted power vanish to working "
                f"precision; raise N or accept the bound", lower_bound=m)
        return m

    def min_valuation_doublings(self, max_doublings, base_slot=0):
        """Yield (n, m_n) for n = 1, 2, 4, ... by repeated squaring of the
        twisted power; stops with PrecisionError like iterate_twisted."""
        C = self.twisted_power(base_slot)
        n = 1
        yield n, self._min_entry_ord(C, n)
        for _ in range(max_doublings):
            C = mat_mul(mat_sigma(C, self.f * n), C)
            n *= 2
            yield n, self._min_entry_ord(C, n)

    # -- reduction mod p and duality ----------------------------------------

    def _p_inverse(self, i, with_unit=True):
        """p * A[i]^(-1), exactly; the unit division costs det-valuation digits."""
        A = self.matrices[i]
        v, u = mat_det(A).unit_part()
        scaled = tuple(tuple((x * self.tower.p).div_pi(v) for x in row) for row in mat_adj(A))
        if not with_unit:
            return scaled
        uinv = u.inverse()
        return mat_scale(scaled, uinv)

    def vbar_matrix(self, i, with_unit=True):
        """Matrix of V: slot i -> slot i-1, reduced mod p.  With
        with_unit=False the result is off by a global unit scalar (same row
        span, no precision spent on inverting the det's unit part)."""
        M = mat_sigma(self._p_inverse(i, with_unit), -1)
        return mat_mod_p(M)

    def fbar_matrix(self, i):
        """A[i] mod p: matrix of F: slot i-1 -> slot i."""
        return mat_mod_p(self.matrices[i])

    def reduce_mod_p(self):
        """Per slot i, the pair (Fbar[i], Vbar[i]) over k[pi]/(pi^e)."""
        return [(self.fbar_matrix(i), self.vbar_matrix(i)) for i in range(self.f)]

    def dual(self):
        """Module of the dual p-divisible group: A_dual[i] = (p A[i]^(-1))^T,
        dual pairing scalars 1/delta[i] (unit scalars required)."""
        duals = [mat_transpose(self._p_inverse(i)) for i in range(self.f)]
        delta = None
        if self.delta is not None:
            if not all(d.is_unit() for d in self.delta):
                raise DomainError(
                    "non-unit",
                    "dual pairing needs unit pairing scalars in this presentation")
            delta = [d.inverse() for d in self.delta]
        budget = sum(2 * self.e - v for v in self.det_orders)
        mode = "separable" if budget == self.g else "general"
        return DModule(self.tower, duals, delta, mode)

    # -- serialization -------------------------------------------------------

    def to_json(self):
        return {
            "tower": self.tower.to_json(),
            "matrices": [[[x.to_json() for x in row] for row in A] for A in self.matrices],
            "delta": None if self.delta is None else [d.to_json() for d in self.delta],
            "mode": self.mode,
        }

    @classmethod
    def from_json(cls, data, tower=None):
        from .wittring import CoeffTower
        if tower is None:
            tower = CoeffTower.from_json(data["tower"])
        mats = [[[tower.ram(x) for x in row] for row in A] for A in data["matrices"]]
        delta = data.get("delta")
        if delta is not None:
            delta = [tower.ram(d) for d in delta]
        return cls(tower, mats, delta, data.get("mode", "separable"))

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)


def build_module(tower, matrices, delta=None, mode="separable"):
    return DModule(tower, matrices, delta, mode)
