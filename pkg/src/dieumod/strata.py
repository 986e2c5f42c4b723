"""Stratification combinatorics and closed-form dimension/degree formulas.

Everything here is exact integer combinatorics on a-types (a^i)_{i in Z/fZ}
with 0 <= a^i <= e and on Lie types ({e^i_1, e^i_2})_i: the poset A(e, f),
spaced types, the spaced bound lambda, stratum dimensions, deformation
dimensions, the polarization degree exponent, the superspecial tables, the
Newton-stratum codimension, and a randomized symbolic check of the
banded-determinant identity used for the tangent-space computation.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .wittring import DomainError
from .invariants import NewtonPoint, admissible_indices


def admissible_slopes(g):
    """S(g) as NewtonPoints, in specialization order."""
    return [NewtonPoint(g, i) for i in admissible_indices(g)]


def newton_stratum_codim(g, m):
    """ceil(m) for m in S(g); the only non-integer member is g/2 for odd g."""
    m = Fraction(m)
    if m not in admissible_indices(g):
        raise DomainError("bad-slope", f"{m} is not in S({g})")
    return -((-m.numerator) // m.denominator)


def is_spaced(a):
    """No two cyclically adjacent nonzero slots (a^i * a^(i+1) = 0)."""
    f = len(a)
    return all(a[i] * a[(i + 1) % f] == 0 for i in range(f))


def spaced_bound(a):
    """lambda(a) = max |b| over spaced b <= a: maximum-weight selection of
    cyclically non-adjacent slots, taking the full a^i on a chosen slot."""
    f = len(a)
    if f == 1:
        return 0
    if f == 2:
        return max(a)

    def path_best(w):
        take, skip = 0, 0
        for x in w:
            take, skip = skip + x, max(take, skip)
        return max(take, skip)

    without_0 = path_best(a[1:])
    with_0 = a[0] + path_best(a[2:f - 1])
    return max(without_0, with_0)


def spaced_bound_exhaustive(a, cap=10 ** 6):
    """Reference computation of lambda(a) by scanning the full down-set."""
    size = 1
    for x in a:
        size *= x + 1
    if size > cap:
        raise DomainError("size-guard", f"down-set has {size} elements > cap {cap}")
    best = 0
    for b in product(*(range(x + 1) for x in a)):
        if is_spaced(b):
            best = max(best, sum(b))
    return best


@dataclass(frozen=True)
class StratumRecord:
    a: tuple
    dim: int
    spaced: bool
    lam: int
    generic_slope_lower: NewtonPoint
    generic_slope_exact: NewtonPoint | None

    def to_json(self):
        return {
            "a": list(self.a),
            "dim": self.dim,
            "spaced": self.spaced,
            "lambda": self.lam,
            "generic_slope_lower": {
                "num": self.generic_slope_lower.index.numerator,
                "den": self.generic_slope_lower.index.denominator,
            },
            "generic_slope_exact": None if self.generic_slope_exact is None else {
                "num": self.generic_slope_exact.index.numerator,
                "den": self.generic_slope_exact.index.denominator,
            },
            "generic_slope_exact_known": self.generic_slope_exact is not None,
        }


def stratum_record(e, f, a):
    """Annotate one a-type: dim = g - |a|; the generic slope is exactly
    s(|a|) for spaced types and only bounded below by s(lambda(a)) otherwise
    (near superspecial points the bound is not attained in general)."""
    g = e * f
    total = sum(a)
    lam = spaced_bound(a)
    half = Fraction(g, 2)
    spaced = is_spaced(a)
    lower = NewtonPoint(g, min(half, Fraction(lam)))
    exact = NewtonPoint(g, min(half, Fraction(total))) if spaced else None
    return StratumRecord(tuple(a), g - total, spaced, lam, lower, exact)


class ATypePoset:
    """A(e, f) = [0, e]^(Z/fZ) under componentwise order, fully annotated."""

    def __init__(self, e, f, cap=10 ** 6):
        if e < 1 or f < 1:
            raise DomainError("bad-shape", "e, f must be >= 1")
        if (e + 1) ** f > cap:
            raise DomainError("size-guard",
                              f"poset has {(e + 1) ** f} elements > cap {cap}")
        self.e, self.f = e, f
        self.elements = sorted(product(range(e + 1), repeat=f))
        self.records = {a: stratum_record(e, f, a) for a in self.elements}

    def cover_edges(self):
        """Hasse covers: pairs (a, b) with b = a + one unit in one slot."""
        out = []
        for a in self.elements:
            for i in range(self.f):
                if a[i] < self.e:
                    b = a[:i] + (a[i] + 1,) + a[i + 1:]
                    out.append((a, b))
        return out

    def leq(self, a, b):
        return all(x <= y for x, y in zip(a, b))

    def to_json(self):
        return {
            "e": self.e, "f": self.f,
            "nodes": [self.records[a].to_json() for a in self.elements],
            "cover_edges": [[list(a), list(b)] for a, b in self.cover_edges()],
        }

    def to_dot(self):
        def name(a):
            return '"' + ",".join(map(str, a)) + '"'

        lines = ["digraph atypes {", "  rankdir=BT;"]
        for a in self.elements:
            r = self.records[a]
            slope = r.generic_slope_exact if r.spaced else r.generic_slope_lower
            rel = "=" if r.spaced else ">="
            lines.append(
                f"  {name(a)} [label=\"{','.join(map(str, a))}\\n"
                f"dim {r.dim}, {rel} s({slope.index})\"];")
        for a, b in self.cover_edges():
            lines.append(f"  {name(a)} -> {name(b)};")
        lines.append("}")
        return "\n".join(lines)


def atype_poset(e, f, cap=10 ** 6):
    return ATypePoset(e, f, cap)


# -- closed-form dimension and degree formulas ------------------------------

def _check_lie_pairs(pairs, e):
    for x, y in pairs:
        if not (0 <= x <= y <= e):
            raise DomainError("bad-shape", f"Lie pair {(x, y)} out of range")


def dp_stratum_dim(pairs, e, f):
    """Dimension g - 2 sum_i min(e^i_1, e^i_2) of the Lie-type stratum."""
    pairs = [tuple(sorted(pr)) for pr in pairs]
    _check_lie_pairs(pairs, e)
    g = e * f
    if sum(x + y for x, y in pairs) != g:
        raise DomainError("det-budget", "Lie exponents must sum to g")
    return g - 2 * sum(min(pr) for pr in pairs)


def deformation_dims(pairs, e, f):
    """The three tangent-space dimensions attached to a Lie type:

    unrestricted  sum_i sum_{j,k} min(e^i_j, e - e^i_k)
    dp            e f + 2 sum_i min(e^i_1, e^i_2)   (under equal slot sums)
    polarized     e f +   sum_i min(e^i_1, e^i_2)

    The flag records whether the dp value agrees with the unrestricted one,
    which happens exactly on the equal-slot-sum locus.
    """
    pairs = [tuple(sorted(pr)) for pr in pairs]
    _check_lie_pairs(pairs, e)
    unrestricted = sum(
        min(pr[j], e - pr[k]) for pr in pairs for j in range(2) for k in range(2))
    msum = sum(min(pr) for pr in pairs)
    return {
        "unrestricted": unrestricted,
        "dp": e * f + 2 * msum,
        "polarized": e * f + msum,
        "dp_consistent": unrestricted == e * f + 2 * msum,
    }


def polarization_degree_exponent(pairs, e, f, normalize=True):
    """Exponent D of the minimal quasi-polarization degree p^D:

        D = 2 sum_{i=1}^{f-1} sum_{k=0}^{i-1} (e^k_1 + e^k_2 - e).

    With normalize=True the slots are rotated so the running partial sums
    are minimized at slot 0 (the convention under which the formula gives
    the minimal degree); otherwise the caller's slot 0 is used literally.
    """
    pairs = [tuple(sorted(pr)) for pr in pairs]
    _check_lie_pairs(pairs, e)
    sums = [x + y for x, y in pairs]
    if normalize:
        if sum(sums) != e * f:
            raise DomainError("det-budget",
                              "normalization needs Lie exponents summing to g")
        partial = [0]
        for s in sums[:-1]:
            partial.append(partial[-1] + s - e)
        best = min(range(f), key=lambda r: (partial[r], r))
        sums = sums[best:] + sums[:best]
    D = 0
    for i in range(1, f):
        D += 2 * sum(sums[k] - e for k in range(i))
    return D


def superspecial_types(e, f):
    """Admissible superspecial patterns (a-type = Lie type).

    Odd f: the constant pattern ({e1, e2})_i with e1 + e2 = e.  Even f: the
    alternating pattern ({e1,e2},{e-e1,e-e2},...) for any 0 <= e1, e2 <= e,
    reduced modulo rotation and in-pair swaps.
    """
    if e < 1 or f < 1:
        raise DomainError("bad-shape", "e, f must be >= 1")
    out = set()
    if f % 2:
        for e1 in range(e // 2 + 1):
            pair = (e1, e - e1)
            out.add(tuple(pair for _ in range(f)))
    else:
        for e1 in range(e + 1):
            for e2 in range(e + 1):
                a = tuple(sorted((e1, e2)))
                b = tuple(sorted((e - e1, e - e2)))
                pattern = (a, b) * (f // 2)
                rotated = pattern[1:] + pattern[:1]
                out.add(min(pattern, rotated))
    return sorted(out)


# -- symbolic check of the banded determinant identity ----------------------

class SqZero:
    """F_p extended by nilpotents with all pairwise products zero:
    elements a + sum v_k eps_k, eps_j eps_k = 0."""

    __slots__ = ("p", "a", "v")

    def __init__(self, p, a, v):
        self.p, self.a, self.v = p, a % p, tuple(x % p for x in v)

    def __add__(self, o):
        return SqZero(self.p, self.a + o.a, [x + y for x, y in zip(self.v, o.v)])

    def __sub__(self, o):
        return SqZero(self.p, self.a - o.a, [x - y for x, y in zip(self.v, o.v)])

    def __neg__(self):
        return SqZero(self.p, -self.a, [-x for x in self.v])

    def __mul__(self, o):
        return SqZero(self.p, self.a * o.a,
                      [self.a * y + o.a * x for x, y in zip(self.v, o.v)])

    def __eq__(self, o):
        return self.a == o.a and self.v == o.v

    def __repr__(self):
        return f"SqZero({self.a}, {list(self.v)})"


def _det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = None
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _det(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    return acc


def _banded_matrix(y, n, p, m):
    """Lower-triangular band: entry (i, j) = Y_(i-j+1) for i >= j."""
    zero = SqZero(p, 0, [0] * m)
    rows = []
    for i in range(n):
        rows.append([SqZero(p, y[i - j], [0] * m) if i >= j else zero
                     for j in range(n)])
    return rows


def _cofactor_1k(rows, k, p, m):
    minor = [r[:k] + r[k + 1:] for r in rows[1:]]
    c = _det(minor) if minor else SqZero(p, 1, [0] * m)  # empty determinant is 1
    return -c if k % 2 else c


def verify_det_identity(n, m1=None, m2=None, trials=20, p=5, rng=None):
    """Randomized exact check of det(U + N) = Y_1^n + sum_k Tr_{k-1}(N) U_{1,k}.

    U is the lower-triangular band of the indeterminates Y (evaluated at
    random scalars) and N has square-zero entries.  With a block split
    (m1, m2), the left side uses the block-diagonal diag(U_m1, U_m2) + N and
    only the diagonal blocks of N contribute their partial traces; the
    cofactors U_{1,k} on the right are always those of the full n x n band
    (for banded U they satisfy (U_m)_{1,k} Y_1^(n-m) = (U_n)_{1,k}, which is
    the quantity the blockwise product expansion actually produces).
    Returns a report dict; `ok` is True when every trial matched.
    """
    import random as _random
    rng = rng or _random.Random(0)
    if m1 is not None:
        m2 = n - m1 if m2 is None else m2
        if m1 + m2 != n or m1 < 1 or m2 < 1:
            raise DomainError("bad-shape", "need n = m1 + m2 with positive blocks")
    m = n * n  # one nilpotent direction per entry of N
    failures = 0
    for _ in range(trials):
        y = [rng.randrange(p) for _ in range(n)]
        band = _banded_matrix(y, n, p, m)
        if m1 is None:
            U = band
        else:
            U1 = _banded_matrix(y, m1, p, m)
            U2 = _banded_matrix(y, m2, p, m)
            zero = SqZero(p, 0, [0] * m)
            U = [row + [zero] * m2 for row in U1] + \
                [[zero] * m1 + row for row in U2]
        # entry (i, j) of N is a random multiple of its own nilpotent eps_(n*i+j)
        N = [[SqZero(p, 0, [(rng.randrange(p) if k == n * i + j else 0)
                            for k in range(m)]) for j in range(n)]
             for i in range(n)]
        UN = [[U[i][j] + N[i][j] for j in range(n)] for i in range(n)]
        lhs = _det(UN)
        rhs = SqZero(p, pow(y[0], n, p), [0] * m)
        for k in range(1, n + 1):
            if m1 is None:
                tr = _trace_shift(N, k - 1, p, m)
            else:
                N11 = [row[:m1] for row in N[:m1]]
                N22 = [row[m1:] for row in N[m1:]]
                tr = _trace_shift(N11, k - 1, p, m) + _trace_shift(N22, k - 1, p, m)
            rhs = rhs + tr * _cofactor_1k(band, k - 1, p, m)
        if lhs != rhs:
            failures += 1
    return {"n": n, "blocks": None if m1 is None else [m1, m2],
            "trials": trials, "failures": failures, "ok": failures == 0}


def _trace_shift(N, k, p, m):
    """Tr_k N = sum of the k-th superdiagonal (zero when k >= size)."""
    size = len(N)
    acc = SqZero(p, 0, [0] * m)
    for i in range(size - k):
        acc = acc + N[i][i + k]
    return acc
