"""Mod-p layer: the residue field F_{p^d}, the Artinian ring k[pi]/(pi^e),
and Smith normal form over it.

Residue-field elements are coefficient tuples over F_p modulo a fixed
irreducible polynomial.  k[pi]/(pi^e) is a chain ring, so a matrix over it
has a Smith form diag(pi^v1, pi^v2, ...) and the exponents are found by
valuation-minimal pivoting.
"""

from . import fppoly


class ResidueField:
    """F_{p^d} presented as F_p[T]/(mu) for an irreducible mu."""

    def __init__(self, p, mu):
        self.p = p
        self.mu = tuple(c % p for c in mu)
        self.d = len(mu) - 1
        self.order = p ** self.d
        if self.d < 1:
            raise ValueError("modulus must have positive degree")

    def __eq__(self, other):
        return isinstance(other, ResidueField) and (self.p, self.mu) == (other.p, other.mu)

    def __hash__(self):
        return hash((self.p, self.mu))

    def __repr__(self):
        return f"ResidueField(p={self.p}, d={self.d})"

    def elem(self, coeffs, log=None):
        if isinstance(coeffs, FqElem):
            return coeffs
        if isinstance(coeffs, int):
            coeffs = [coeffs % self.p]
        c = fppoly.pmod([x % self.p for x in coeffs], list(self.mu), self.p)
        return FqElem(self, tuple(c), log)

    def zero(self):
        return FqElem(self, ())

    def one(self):
        return FqElem(self, (1,), 0)

    def gen(self):
        """The residue of T; a multiplicative generator when mu is primitive."""
        return self.elem([0, 1], 1)

    def gen_pow(self, k):
        """gen()**k, remembering the exponent so Witt lifts stay cheap."""
        k %= self.order - 1
        c = fppoly.ppowmod([0, 1], k, list(self.mu), self.p)
        return FqElem(self, tuple(c), k)

    def random(self, rng):
        return self.elem(fppoly.crandom(rng, self.p, self.d))

    def random_unit(self, rng):
        """Uniform over F_{p^d}^* as a generator power (mu must be primitive)."""
        return self.gen_pow(rng.randrange(self.order - 1))

    def elements(self):
        for n in range(self.order):
            c = []
            t = n
            for _ in range(self.d):
                c.append(t % self.p)
                t //= self.p
            yield self.elem(c)


class FqElem:
    """Element of a ResidueField.  `log` caches a known discrete log of the
    element with respect to the generator (None when unknown)."""

    __slots__ = ("field", "coeffs", "log")

    def __init__(self, field, coeffs, log=None):
        self.field = field
        self.coeffs = coeffs
        self.log = log

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, FqElem)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field.p, self.coeffs))

    def __repr__(self):
        return f"Fq{list(self.coeffs)}"

    def _lift(self, other):
        if isinstance(other, int):
            return self.field.elem(other)
        return other

    def __add__(self, other):
        other = self._lift(other)
        return FqElem(self.field, tuple(fppoly.padd(list(self.coeffs), list(other.coeffs), self.field.p)))

    def __sub__(self, other):
        other = self._lift(other)
        return FqElem(self.field, tuple(fppoly.psub(list(self.coeffs), list(other.coeffs), self.field.p)))

    def __neg__(self):
        return FqElem(self.field, tuple(fppoly.pscale(list(self.coeffs), -1, self.field.p)))

    def __mul__(self, other):
        other = self._lift(other)
        f = self.field
        c = fppoly.pmod(fppoly.pmul(list(self.coeffs), list(other.coeffs), f.p), list(f.mu), f.p)
        log = None
        if self.log is not None and other.log is not None and self.coeffs and other.coeffs:
            log = (self.log + other.log) % (f.order - 1)
        return FqElem(f, tuple(c), log)

    __radd__ = __add__
    __rmul__ = __mul__

    def inverse(self):
        if not self.coeffs:
            raise ZeroDivisionError("zero in residue field")
        f = self.field
        g, u, _ = fppoly.pgcdext(list(self.coeffs), list(f.mu), f.p)
        if g != [1]:
            raise ArithmeticError("modulus is not irreducible")
        log = None if self.log is None else (-self.log) % (f.order - 1)
        return FqElem(f, tuple(u), log)

    def __pow__(self, n):
        f = self.field
        if not self.coeffs:
            if n < 0:
                raise ZeroDivisionError("zero in residue field")
            return f.one() if n == 0 else f.zero()
        n %= f.order - 1
        c = fppoly.ppowmod(list(self.coeffs), n, list(f.mu), f.p)
        log = None if self.log is None else self.log * n % (f.order - 1)
        return FqElem(f, tuple(c), log)

    def frob(self, n=1):
        """Frobenius x -> x^(p^n)."""
        return self ** (self.field.p ** (n % self.field.d))


class PiPoly:
    """Element of k[pi]/(pi^e): a length-e list of residue-field coefficients."""

    __slots__ = ("field", "e", "coeffs")

    def __init__(self, field, e, coeffs):
        self.field = field
        self.e = e
        cs = list(coeffs) + [field.zero()] * (e - len(coeffs))
        self.coeffs = tuple(cs[:e])

    @classmethod
    def zero(cls, field, e):
        return cls(field, e, [])

    def __eq__(self, other):
        return isinstance(other, PiPoly) and self.coeffs == other.coeffs and self.e == other.e

    def __hash__(self):
        return hash((self.e, self.coeffs))

    def __repr__(self):
        return f"PiPoly{[list(c.coeffs) for c in self.coeffs]}"

    def __add__(self, other):
        return PiPoly(self.field, self.e, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return PiPoly(self.field, self.e, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return PiPoly(self.field, self.e, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, FqElem):
            return PiPoly(self.field, self.e, [c * other for c in self.coeffs])
        out = [self.field.zero() for _ in range(self.e)]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j < self.e and b:
                    out[i + j] = out[i + j] + a * b
        return PiPoly(self.field, self.e, out)

    def __bool__(self):
        return any(self.coeffs)

    def ord(self):
        """pi-adic valuation; e for the zero element."""
        for j, c in enumerate(self.coeffs):
            if c:
                return j
        return self.e

    def is_unit(self):
        return bool(self.coeffs[0])

    def shift_down(self, v):
        """Exact division by pi^v (the low v coefficients must vanish)."""
        if any(self.coeffs[j] for j in range(min(v, self.e))):
            raise ValueError("not divisible by pi^v")
        return PiPoly(self.field, self.e, list(self.coeffs[v:]))

    def inverse(self):
        """Series inversion of a unit mod pi^e."""
        if not self.is_unit():
            raise ZeroDivisionError("non-unit in k[pi]/(pi^e)")
        inv0 = self.coeffs[0].inverse()
        out = [inv0] + [self.field.zero()] * (self.e - 1)
        for j in range(1, self.e):
            acc = self.field.zero()
            for i in range(1, j + 1):
                acc = acc + self.coeffs[i] * out[j - i]
            out[j] = -(inv0 * acc)
        return PiPoly(self.field, self.e, out)

    def constant(self):
        return self.coeffs[0]


def smith_exponents(rows, e, width=2):
    """Elementary divisor exponents of the cokernel of the row span in R^width,
    R = k[pi]/(pi^e).  Returns a sorted list of `width` exponents in [0, e].

    Pivot on the globally valuation-minimal entry (ties broken by row then
    column index); one elimination pass per pivot suffices over a chain ring.
    """
    rows = [list(r) for r in rows]
    cols = list(range(width))
    divisors = []
    while cols and rows:
        best = None
        for ri, row in enumerate(rows):
            for ci in range(len(cols)):
                v = row[ci].ord()
                if best is None or v < best[0]:
                    best = (v, ri, ci)
        v, ri, ci = best
        if v >= e:
            break
        pivot_row = rows.pop(ri)
        pivot = pivot_row[ci]
        unit_inv = pivot.shift_down(v).inverse()
        pivot_row = [x * unit_inv for x in pivot_row]
        for row in rows:
            x = row[ci]
            if x:
                factor = x.shift_down(v)
                for j in range(len(cols)):
                    row[j] = row[j] - factor * pivot_row[j]
        for row in rows:
            row.pop(ci)
        cols.pop(ci)
        divisors.append(v)
    divisors += [e] * len(cols)
    return sorted(divisors)


def mat_rank_over_field(rows):
    """Rank of a small matrix with FqElem entries (Gaussian elimination)."""
    rows = [list(r) for r in rows if any(r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    while rows and col < ncols:
        piv = next((i for i, r in enumerate(rows) if r[col]), None)
        if piv is None:
            col += 1
            continue
        row = rows.pop(piv)
        inv = row[col].inverse()
        row = [x * inv for x in row]
        rows = [[x - r[col] * y for x, y in zip(r, row)] for r in rows]
        rank += 1
        col += 1
    return rank
