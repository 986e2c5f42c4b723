"""The three invariants of a module: Lie type, a-type, Newton polygon,
plus the a-index, classification flags, a-type bounds and dual formulas.

Lie type and a-type are elementary-divisor data of mod-p cokernels over
k[pi]/(pi^e); the Newton point is an element of

    S(g) = {0, 1, ..., floor(g/2)} u {g/2}

computed either from the trace valuation of the one-slot F^f matrix (fast;
exact on the normal-form families) or by a bracketing limit of minimal
entry valuations of iterated twisted powers (the independent oracle).
"""

from dataclasses import dataclass
from fractions import Fraction

from .modp import smith_exponents, mat_rank_over_field
from .wittring import PrecisionError, DomainError, INF


def admissible_indices(g):
    """S(g) as an ordered list of Fractions."""
    out = [Fraction(i) for i in range(g // 2 + 1)]
    half = Fraction(g, 2)
    if half not in out:
        out.append(half)
    return out


@dataclass(frozen=True)
class NewtonPoint:
    g: int
    index: Fraction

    def __post_init__(self):
        if self.index not in admissible_indices(self.g):
            raise DomainError("bad-slope", f"{self.index} is not in S({self.g})")

    @property
    def sequence(self):
        lam = self.index / self.g
        return tuple(sorted([lam] * self.g + [1 - lam] * self.g))

    @property
    def is_ordinary(self):
        return self.index == 0

    @property
    def is_supersingular(self):
        return 2 * self.index == self.g

    def __repr__(self):
        return f"s({self.index})"

    def to_json(self):
        return {
            "index_num": self.index.numerator,
            "index_den": self.index.denominator,
            "sequence": [[s.numerator, s.denominator] for s in self.sequence],
        }


def slope_point(g, i):
    return NewtonPoint(g, Fraction(i))


@dataclass(frozen=True)
class LieType:
    e: int
    pairs: tuple  # per-slot sorted (e1, e2)

    def __post_init__(self):
        for a, b in self.pairs:
            if not (0 <= a <= b <= self.e):
                raise DomainError("bad-shape", f"Lie pair {(a, b)} out of [0, {self.e}]")

    @property
    def f(self):
        return len(self.pairs)

    @property
    def total(self):
        return sum(a + b for a, b in self.pairs)

    @property
    def is_rapoport(self):
        return all(pair == (0, self.e) for pair in self.pairs)

    @property
    def is_dp(self):
        return len({a + b for a, b in self.pairs}) == 1

    def to_json(self):
        return [list(pair) for pair in self.pairs]


@dataclass(frozen=True)
class AType:
    e: int
    pairs: tuple  # per-slot sorted (a1, a2)

    @property
    def f(self):
        return len(self.pairs)

    @property
    def a_number(self):
        return sum(a + b for a, b in self.pairs)

    @property
    def rapoport_form(self):
        """Per-slot single exponents (a^i) when every pair is {0, a}."""
        if all(a == 0 for a, _ in self.pairs):
            return tuple(b for _, b in self.pairs)
        return None

    def to_json(self):
        return {
            "pairs": [list(pair) for pair in self.pairs],
            "rapoport_form": None if self.rapoport_form is None else list(self.rapoport_form),
            "a_number": self.a_number,
        }


def _slot_rows(matrix):
    return [list(matrix[0]), list(matrix[1])]


def lie_type(M):
    """Elementary divisors of M^i / V M^(i+1), slot by slot."""
    pairs = []
    for i in range(M.f):
        rows = _slot_rows(M.vbar_matrix((i + 1) % M.f, with_unit=False))
        d = smith_exponents(rows, M.e)
        pairs.append(tuple(d))
    return LieType(M.e, tuple(pairs))


def a_type(M):
    """Elementary divisors of M^i / (F M^(i-1) + V M^(i+1)), slot by slot."""
    pairs = []
    for i in range(M.f):
        rows = _slot_rows(M.fbar_matrix(i)) + \
            _slot_rows(M.vbar_matrix((i + 1) % M.f, with_unit=False))
        d = smith_exponents(rows, M.e)
        pairs.append(tuple(d))
    return AType(M.e, tuple(pairs))


def a_index(M):
    """(tau, t, reduced a-number) for a module satisfying the Rapoport
    condition; refuses other modules, where the a-index is not defined."""
    L = lie_type(M)
    if not L.is_rapoport:
        raise DomainError("not-rapoport",
                          "a-index is only defined on the Rapoport locus",
                          lie_type=L.to_json())
    a = a_type(M)
    tau = tuple(i for i, (_, ai) in enumerate(a.pairs) if ai)
    reduced = 0
    for i in range(M.f):
        rows = _slot_rows(M.fbar_matrix(i)) + \
            _slot_rows(M.vbar_matrix((i + 1) % M.f, with_unit=False))
        krows = [[x.constant() for x in row] for row in rows]
        reduced += 2 - mat_rank_over_field(krows)
    return tau, len(tau), reduced


def newton_point(M, method="fast", max_doublings=7):
    """Newton point of the module (det-valuation budget must equal g).

    fast:   index = min(g/2, ord_pi(trace of the one-slot F^f matrix));
            a trace that vanishes to working precision certifies g/2 because
            the precision policy keeps e*N > g/2.
    oracle: bracket m_n / n (minimal entry valuation of the n-fold twisted
            power) onto S(g) under doubling until the bracket stabilizes.
    """
    if M.det_sum != M.g:
        raise DomainError("det-budget",
                          f"Newton point needs det budget g, found {M.det_sum}")
    if method == "fast":
        return _newton_fast(M)
    if method == "oracle":
        return _newton_oracle(M, max_doublings)
    raise DomainError("bad-shape", f"unknown method {method!r}")


def _newton_fast(M):
    B = M.twisted_power(0)
    tr = B[0][0] + B[1][1]
    g = M.g
    half = Fraction(g, 2)
    try:
        v = tr.ord_pi()
    except PrecisionError as exc:
        # trace vanishes to the certified precision; decisive iff that
        # precision already exceeds g/2
        if 2 * exc.lower_bound > g:
            return NewtonPoint(g, half)
        raise
    idx = half if v is INF else min(half, Fraction(v))
    return NewtonPoint(g, idx)


def _ceil_to_slopes(g, x):
    for s in admissible_indices(g):
        if s >= x:
            return s
    return Fraction(g, 2)


def _newton_oracle(M, max_doublings):
    """Bracket the index from below.  Superadditivity of the minimal entry
    valuations gives m_n/n <= index for every n (Fekete), so the ceiling of
    m_n/n in S(g) is a certified lower bound that converges to the index;
    we accept it once it hits g/2 or freezes over three doublings past n=16."""
    g = M.g
    half = Fraction(g, 2)
    history = []
    n = 0
    try:
        for n, m_n in M.min_valuation_doublings(max_doublings):
            cand = _ceil_to_slopes(g, min(half, Fraction(m_n, n)))
            history.append(cand)
            if cand == half:
                return NewtonPoint(g, half)
            if (len(history) >= 3 and n >= 16
                    and history[-1] == history[-2] == history[-3]):
                return NewtonPoint(g, cand)
    except PrecisionError as exc:
        n_fail = max(2 * n, 1)
        bound = _ceil_to_slopes(g, min(half, Fraction(exc.lower_bound, n_fail)))
        raise PrecisionError(
            "oracle exhausted working precision before the bracket stabilized; "
            f"certified lower bound s({bound})", lower_bound=bound) from exc
    raise PrecisionError(
        "oracle bracket did not stabilize within the doubling budget; "
        f"last bracket s({history[-1]})", lower_bound=history[-1])


def classify(M):
    """Flags {rapoport, dp, ordinary, supersingular, superspecial}."""
    L = lie_type(M)
    a = a_type(M)
    np_ = newton_point(M)
    return {
        "rapoport": L.is_rapoport,
        "dp": L.is_dp,
        "ordinary": np_.is_ordinary,
        "supersingular": np_.is_supersingular,
        "superspecial": a.a_number == M.g,
    }


def a_type_bounds(L):
    """Per slot: the forced a^i_1 and the interval [lo, hi] for a^i_2 allowed
    by the Lie type (elementary-divisor bound through F M^(i-1) + V M^(i+1))."""
    e, f = L.e, L.f
    out = []
    for i in range(f):
        e1, e2 = L.pairs[i]
        d1, d2 = L.pairs[(i - 1) % f]
        if e1 <= e - d2:
            a1 = e1
            lo, hi = min(e2, e - d2), min(e2, e - d1)
        else:
            a1 = e - d2
            lo, hi = min(e - d1, e1), min(e - d1, e2)
        out.append((a1, (lo, hi)))
    return out


def dual_invariants(L, a):
    """Dual Lie type and dual a-type pairs from the duality formulas:
    the dual Lie pair at slot i is {e - e^i_1, e - e^i_2}; the dual a-pair
    has b^i_1 = min(e-e^i_1, e-e^i_2, e^(i-1)_1, e^(i-1)_2) and
    b^i_1 + b^i_2 = |a^i| + |e^(i-1)| - |e^i|."""
    e, f = L.e, L.f
    dual_lie = LieType(e, tuple(tuple(sorted((e - x, e - y))) for x, y in L.pairs))
    pairs = []
    for i in range(f):
        e1, e2 = L.pairs[i]
        d1, d2 = L.pairs[(i - 1) % f]
        a1, a2 = a.pairs[i]
        b1 = min(e - e1, e - e2, d1, d2)
        b2 = (a1 + a2) + (d1 + d2) - (e1 + e2) - b1
        if not (b1 <= b2 <= e):
            raise DomainError("inconsistent",
                              f"dual a-pair ({b1}, {b2}) out of range at slot {i}")
        pairs.append((b1, b2))
    return dual_lie, AType(e, tuple(pairs))


def invariant_report(M):
    """Everything at once, as a JSON-ready dict."""
    L = lie_type(M)
    a = a_type(M)
    flags = None
    newton = None
    if M.det_sum == M.g:
        np_ = newton_point(M)
        newton = np_.to_json()
        flags = classify(M)
    report = {
        "lie_type": L.to_json(),
        "a_type": a.to_json()["pairs"],
        "a_number": a.a_number,
        "newton": newton,
        "flags": flags,
        "det_valuations": list(M.det_orders),
        "mode": M.mode,
    }
    report["a_index"] = None
    report["reduced_a_number"] = None
    if L.is_rapoport:
        tau, t, reduced = a_index(M)
        report["a_index"] = list(tau)
        report["reduced_a_number"] = reduced
    return report
