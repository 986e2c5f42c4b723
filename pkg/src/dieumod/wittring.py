"""Exact arithmetic in the coefficient tower

    F_{p^d}  ->  W_N(F_{p^d})  ->  W_N(F_{p^d})[pi]/(P(pi)),   d = f * ext,

with P Eisenstein (default pi^e = p).  W_N(F_{p^d}) is realized as
Z/p^N [T]/(m(T)) where m(T) is the unique monic lift of a primitive
irreducible polynomial dividing T^(p^d - 1) - 1, so T is a Teichmuller
element and the Witt Frobenius is simply T -> T^p.

Ramified elements carry a certified precision `prec` (number of exact
pi-adic digits, at most e*N).  Ring operations never lose precision;
division by pi does, and everything downstream either tracks the loss or
raises PrecisionError when a requested answer is no longer certified.
"""

import json
import math
from . import fppoly
from .modp import ResidueField, FqElem, PiPoly

INF = math.inf


class PrecisionError(ArithmeticError):
    """A value is needed beyond the digits that are certified."""

    def __init__(self, message, lower_bound=None):
        super().__init__(message)
        self.lower_bound = lower_bound


class DomainError(ValueError):
    """Invalid mathematical input; `code` keys the machine-readable form."""

    def __init__(self, code, message, **info):
        super().__init__(message)
        self.code = code
        self.info = info


class CoeffTower:
    """Immutable description of the working rings; all element ops live here."""

    def __init__(self, p, f, e, ext=1, N=None, modulus=None, eisenstein=None):
        if not fppoly.is_prime(p):
            raise DomainError("not-prime", f"p = {p} is not prime")
        if f < 1 or e < 1 or ext < 1:
            raise DomainError("bad-shape", "f, e, ext must all be >= 1")
        if N is None:
            N = (e * f + 2 + e - 1) // e  # smallest N meeting the policy
        if e * N < e * f + 2:
            raise DomainError(
                "precision-policy",
                f"e*N = {e * N} < e*f + 2 = {e * f + 2}; raise N",
            )
        self.p, self.f, self.e, self.ext, self.N = p, f, e, ext, N
        self.d = f * ext
        self.q = p ** self.d
        self.pN = p ** N
        if eisenstein is None:
            eisenstein = [(-p) % self.pN] + [0] * (e - 1) + [1]
        eisenstein = [c % self.pN for c in eisenstein]
        if len(eisenstein) != e + 1 or eisenstein[-1] != 1:
            raise DomainError("bad-eisenstein", "expected a monic polynomial of degree e")
        if any(c % p for c in eisenstein[:-1]) or eisenstein[0] % (p * p) == 0:
            raise DomainError("bad-eisenstein", "polynomial is not Eisenstein at p")
        self.eisenstein = tuple(eisenstein)
        self.is_default_eisenstein = eisenstein == [(-p) % self.pN] + [0] * (e - 1) + [1]

        if modulus is None:
            mu = fppoly.smallest_primitive(p, self.d)
            modulus = fppoly.teichmuller_modulus(mu, p, N)
        modulus = [c % self.pN for c in modulus]
        if len(modulus) != self.d + 1 or modulus[-1] != 1:
            raise DomainError("bad-modulus", "modulus must be monic of degree f*ext")
        mu = [c % p for c in modulus]
        if not fppoly.is_irreducible(mu, p):
            raise DomainError("bad-modulus", "modulus is not irreducible mod p")
        if not fppoly.is_primitive(mu, p):
            # the residue of T must generate F_q^*: gen_pow, random_unit and
            # the pairing-scalar construction all rely on it
            raise DomainError("bad-modulus", "modulus is not primitive mod p")
        if fppoly.ppowmod([0, 1], self.q - 1, modulus, self.pN) != [1]:
            raise DomainError("bad-modulus", "T is not a (q-1)-th root of unity mod modulus")
        self.modulus = tuple(modulus)
        self.residue_field = ResidueField(p, mu)

        # reduction table for x^(d+k), packed multiplication parameters,
        # and Frobenius basis maps sigma^n(x^j) = x^(j p^n)
        self._xpow = []
        r = fppoly.pmod([0] * self.d + [1], modulus, self.pN)
        for _ in range(self.d - 1):
            self._xpow.append(self._pad(r))
            r = fppoly.pmod([0] + r, modulus, self.pN)
        self._packbits = 2 * self.pN.bit_length() + self.d.bit_length() + 2
        self._packmask = (1 << self._packbits) - 1
        self._packed_xpow = [self._pack(row) for row in self._xpow]
        self._sigma_maps = {}
        self._zero_w = None
        self._one_w = None

    # -- plumbing -----------------------------------------------------------

    def _pad(self, coeffs):
        return list(coeffs) + [0] * (self.d - len(coeffs))

    def _pack(self, coeffs):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc << self._packbits) | c
        return acc

    def _unpack(self, acc, n):
        out = []
        for _ in range(n):
            out.append(acc & self._packmask)
            acc >>= self._packbits
        return out

    def _mulmod(self, a, b):
        """Product of two padded coefficient lists mod (modulus, p^N)."""
        conv = self._unpack(self._pack(a) * self._pack(b), 2 * self.d - 1)
        low = [c % self.pN for c in conv[: self.d]]
        if self.d > 1:
            acc = 0
            for k in range(self.d, 2 * self.d - 1):
                c = conv[k] % self.pN
                if c:
                    acc += c * self._packed_xpow[k - self.d]
            if acc:
                extra = self._unpack(acc, self.d)
                low = [(x + y) % self.pN for x, y in zip(low, extra)]
        return low

    def _sigma_map(self, n):
        n %= self.d
        if n not in self._sigma_maps:
            rows = [self._pad([1])]
            pn = self.p ** n
            for j in range(1, self.d):
                img = fppoly.ppowmod([0, 1], j * pn, list(self.modulus), self.pN)
                rows.append(self._pad(img))
            self._sigma_maps[n] = rows
        return self._sigma_maps[n]

    def __eq__(self, other):
        return isinstance(other, CoeffTower) and self.describe() == other.describe()

    def __hash__(self):
        return hash((self.p, self.f, self.e, self.ext, self.N, self.modulus, self.eisenstein))

    def __repr__(self):
        return (f"CoeffTower(p={self.p}, f={self.f}, e={self.e}, "
                f"ext={self.ext}, N={self.N})")

    def describe(self):
        return {
            "p": self.p, "f": self.f, "e": self.e, "ext": self.ext, "N": self.N,
            "modulus": list(self.modulus), "eisenstein": list(self.eisenstein),
        }

    @property
    def g(self):
        return self.e * self.f

    @property
    def pi_precision(self):
        return self.e * self.N

    def to_json(self):
        return {"p": self.p, "f": self.f, "e": self.e, "ext": self.ext,
                "N": self.N, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data):
        return cls(data["p"], data["f"], data["e"], data.get("ext", 1),
                   data["N"], modulus=data.get("modulus"))

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)

    # -- Witt elements ------------------------------------------------------

    def witt(self, coeffs):
        """WittElem from an int or a little-endian coefficient list."""
        if isinstance(coeffs, WittElem):
            if coeffs.tower is not self and coeffs.tower != self:
                raise DomainError("tower-mismatch", "element from a different tower")
            return coeffs
        if isinstance(coeffs, int):
            coeffs = [coeffs]
        c = self._pad([x % self.pN for x in coeffs[: self.d]])
        if len(coeffs) > self.d:
            raise DomainError("bad-shape", "too many Witt coefficients")
        return WittElem(self, tuple(c))

    def witt_zero(self):
        if self._zero_w is None:
            self._zero_w = self.witt(0)
        return self._zero_w

    def witt_one(self):
        if self._one_w is None:
            self._one_w = self.witt(1)
        return self._one_w

    def witt_gen(self):
        return self.witt([0, 1])

    def teichmuller(self, a):
        """The unique multiplicative lift of a residue-field element.

        Elements carrying a discrete log (from gen_pow/random_unit) lift as
        powers of T; otherwise iterate q-th powers to the fixpoint.
        """
        if isinstance(a, int):
            a = self.residue_field.elem(a)
        if not isinstance(a, FqElem) or a.field != self.residue_field:
            raise DomainError("tower-mismatch", "not a residue-field element of this tower")
        if not a:
            return self.witt_zero()
        if a.log is not None:
            return self.witt_gen() ** a.log if a.log else self.witt_one()
        y = self.witt(list(a.coeffs))
        for _ in range(self.N + 1):
            y2 = y ** self.q
            if y2 == y:
                return y2
            y = y2
        raise RuntimeError("Teichmuller iteration did not stabilize")

    def random_witt(self, rng):
        return self.witt([rng.randrange(self.pN) for _ in range(self.d)])

    # -- ramified elements --------------------------------------------------

    def ram(self, coeffs, prec=None):
        """RamElem from a list of e Witt coefficients (or ints), or an int."""
        if isinstance(coeffs, RamElem):
            return coeffs
        if isinstance(coeffs, (int, WittElem)):
            coeffs = [coeffs]
        if len(coeffs) > self.e:
            raise DomainError("bad-shape", "too many pi-coefficients")
        cs = [self.witt(c) for c in coeffs] + [self.witt_zero()] * (self.e - len(coeffs))
        return RamElem(self, tuple(cs), self.pi_precision if prec is None else prec)

    def zero(self):
        return self.ram(0)

    def one(self):
        return self.ram(1)

    def pi(self):
        if self.e == 1:
            return self.ram(self.p)
        return self.ram([0, 1])

    def pi_pow(self, n):
        if n < 0:
            raise DomainError("bad-shape", "negative pi power")
        q, r = divmod(n, self.e)
        unit = self.ram(pow(self.p, q, self.pN)) if self.is_default_eisenstein else None
        if unit is None:
            x = self.one()
            for _ in range(n):
                x = x * self.pi()
            return x
        return unit * self.ram([0] * r + [1]) if r else unit

    def random_ram(self, rng):
        return self.ram([self.random_witt(rng) for _ in range(self.e)])

    def random_ram_unit(self, rng):
        c = [self.random_witt(rng) for _ in range(self.e)]
        while c[0].ord_p() > 0:
            c[0] = self.random_witt(rng)
        return self.ram(c)


class WittElem:
    """Element of W_N(F_{p^d}), canonical coefficients in [0, p^N)."""

    __slots__ = ("tower", "coeffs")

    def __init__(self, tower, coeffs):
        self.tower = tower
        self.coeffs = coeffs

    def __eq__(self, other):
        return isinstance(other, WittElem) and self.coeffs == other.coeffs \
            and self.tower == other.tower

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"W{list(self.coeffs)}"

    def _wrap(self, coeffs):
        return WittElem(self.tower, tuple(c % self.tower.pN for c in coeffs))

    def _lift(self, other):
        if isinstance(other, int):
            return self.tower.witt(other)
        return other

    def __add__(self, other):
        other = self._lift(other)
        return self._wrap([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        other = self._lift(other)
        return self._wrap([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return self._wrap([-a for a in self.coeffs])

    def __mul__(self, other):
        other = self._lift(other)
        return WittElem(self.tower, tuple(self.tower._mulmod(list(self.coeffs), list(other.coeffs))))

    __radd__ = __add__
    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.tower.witt_one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def sigma(self, n=1):
        """Witt Frobenius sigma^n; sigma(T) = T^p, identity on Z/p^N."""
        rows = self.tower._sigma_map(n)
        t = self.tower
        acc = 0
        for j, c in enumerate(self.coeffs):
            if c:
                acc += c * t._pack(rows[j])
        return WittElem(t, tuple(c % t.pN for c in t._unpack(acc, t.d)))

    def ord_p(self):
        """min coefficient valuation; N for the zero element."""
        best = self.tower.N
        for c in self.coeffs:
            if c:
                v = 0
                while c % self.tower.p == 0:
                    c //= self.tower.p
                    v += 1
                best = min(best, v)
        return best

    def is_unit(self):
        return self.ord_p() == 0

    def residue(self):
        return self.tower.residue_field.elem([c % self.tower.p for c in self.coeffs])

    def inverse(self):
        if not self.is_unit():
            raise DomainError("non-unit", "inverting a non-unit Witt element")
        t = self.tower
        r = self.residue().inverse()
        z = t.witt(list(r.coeffs))
        one = t.witt_one()
        for _ in range(t.N.bit_length() + 1):
            err = one - self * z
            if not err:
                return z
            z = z + z * err
        raise RuntimeError("Newton inversion did not converge")

    def exact_div_p(self):
        """Exact division by p; the top p-adic digit of the result is not
        certified (callers account for it through RamElem precision)."""
        if any(c % self.tower.p for c in self.coeffs):
            raise DomainError("non-divisible", "Witt element is not divisible by p")
        return WittElem(self.tower, tuple(c // self.tower.p for c in self.coeffs))

    def to_json(self):
        return list(self.coeffs)


def _truncated(tower, coeffs, prec):
    """Zero all pi-adic digits at or above prec (coefficient j carries the
    digits j, j+e, j+2e, ...)."""
    e, N, p = tower.e, tower.N, tower.p
    out = []
    for j, c in enumerate(coeffs):
        levels = max(0, min(N, -(-(prec - j) // e)))
        mod = p ** levels
        out.append(WittElem(tower, tuple(x % mod for x in c.coeffs)))
    return tuple(out)


class RamElem:
    """Element of W_N[pi]/(P(pi)) with a certified pi-adic precision."""

    __slots__ = ("tower", "coeffs", "prec")

    def __init__(self, tower, coeffs, prec=None):
        self.tower = tower
        full = tower.pi_precision
        self.prec = full if prec is None else min(prec, full)
        if self.prec < full:
            coeffs = _truncated(tower, coeffs, self.prec)
        self.coeffs = tuple(coeffs)

    def __eq__(self, other):
        return (isinstance(other, RamElem) and self.coeffs == other.coeffs
                and self.prec == other.prec)

    def __hash__(self):
        return hash((self.coeffs, self.prec))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        body = ", ".join(repr(list(c.coeffs)) for c in self.coeffs)
        tag = "" if self.prec == self.tower.pi_precision else f" ~pi^{self.prec}"
        return f"Ram[{body}]{tag}"

    def _lift(self, other):
        if isinstance(other, (int, WittElem)):
            return self.tower.ram(other)
        return other

    def __add__(self, other):
        other = self._lift(other)
        return RamElem(self.tower,
                       [a + b for a, b in zip(self.coeffs, other.coeffs)],
                       min(self.prec, other.prec))

    def __sub__(self, other):
        other = self._lift(other)
        return RamElem(self.tower,
                       [a - b for a, b in zip(self.coeffs, other.coeffs)],
                       min(self.prec, other.prec))

    def __neg__(self):
        return RamElem(self.tower, [-a for a in self.coeffs], self.prec)

    def _repr_ord(self):
        """Valuation of the stored representative (full pi_precision if 0)."""
        best = self.tower.pi_precision
        for j, c in enumerate(self.coeffs):
            v = c.ord_p()
            if v < self.tower.N:
                best = min(best, self.tower.e * v + j)
        return best

    def __mul__(self, other):
        if isinstance(other, FqElem):
            raise TypeError("lift residue elements before multiplying")
        other = self._lift(other)
        t = self.tower
        e = t.e
        full = t.pi_precision
        conv = [t.witt_zero() for _ in range(2 * e - 1)]
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        conv[i + j] = conv[i + j] + a * b
        # fold pi^(e+k) using the Eisenstein relation pi^e = -sum E_j pi^j
        for k in range(2 * e - 2, e - 1, -1):
            c = conv[k]
            if c:
                for j in range(e):
                    Ej = t.eisenstein[j]
                    if Ej:
                        conv[k - e + j] = conv[k - e + j] - c * Ej
                conv[k] = t.witt_zero()
        prec = full
        if self.prec < full or other.prec < full:
            prec = min(self._repr_ord() + other.prec, other._repr_ord() + self.prec,
                       self.prec + other.prec, full)
        return RamElem(t, conv[:e], prec)

    __radd__ = __add__
    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.tower.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def sigma(self, n=1):
        """sigma^n coefficientwise; sigma(pi) = pi since P has Z_p coefficients."""
        return RamElem(self.tower, [c.sigma(n) for c in self.coeffs], self.prec)

    def ord_pi(self):
        """Exact valuation, INF for a certified zero, PrecisionError otherwise."""
        v = self._repr_ord()
        if v < self.prec:
            return v
        if self.prec == self.tower.pi_precision:
            return INF
        raise PrecisionError(
            f"valuation >= {self.prec} but element only certified to pi^{self.prec}",
            lower_bound=self.prec)

    def ord_lower(self):
        """A certified lower bound for the valuation (never raises)."""
        return min(self._repr_ord(), self.prec)

    def is_unit(self):
        return self.coeffs[0].is_unit()

    def residue_poly(self):
        """Reduction mod p as a PiPoly over the residue field."""
        if self.prec < self.tower.e:
            raise PrecisionError("mod-p reduction needs e certified digits",
                                 lower_bound=self.prec)
        return PiPoly(self.tower.residue_field, self.tower.e,
                      [c.residue() for c in self.coeffs])

    def div_pi(self, v=1):
        """Exact division by pi^v; costs v digits of certified precision."""
        t = self.tower
        if not t.is_default_eisenstein:
            raise DomainError("unsupported", "pi-division needs the default relation pi^e = p")
        x = list(self.coeffs)
        prec = self.prec
        for _ in range(v):
            low = x[0]
            if any(c % t.p for c in low.coeffs):
                raise DomainError("non-divisible", "element is not divisible by pi")
            x = x[1:] + [low.exact_div_p()]
            prec -= 1
        if prec <= 0:
            raise PrecisionError("no certified digits left after pi-division", lower_bound=0)
        return RamElem(t, x, prec)

    def unit_part(self):
        """(v, u) with self = pi^v * u and u a unit; requires a nonzero
        representative."""
        v = self._repr_ord()
        if v >= self.prec:
            raise PrecisionError("cannot split a value that is zero to working precision",
                                 lower_bound=self.prec)
        return v, self.div_pi(v)

    def inverse(self):
        if not self.is_unit():
            raise DomainError("non-unit", "inverting a non-unit; use unit_part first")
        t = self.tower
        z = t.ram(self.coeffs[0].inverse())
        one = t.one()
        for _ in range(t.pi_precision.bit_length() + 2):
            err = one - self * z
            if err.ord_lower() >= self.prec:
                return RamElem(t, z.coeffs, self.prec)
            z = z + z * err
        raise RuntimeError("Newton inversion did not converge")

    def to_json(self):
        return [c.to_json() for c in self.coeffs]


def frobenius(x, n=1):
    """sigma^n on either element kind (negative n allowed; order d = f*ext)."""
    return x.sigma(n)


def ord_pi(x):
    return x.ord_pi()


def teichmuller(tower, a):
    return tower.teichmuller(a)


def build_coeff_tower(p, f, e, ext=1, N=None):
    return CoeffTower(p, f, e, ext, N)
