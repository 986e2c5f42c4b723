"""Dense polynomial helpers over Z/m, used by the Witt-ring layer.

Polynomials are plain lists of ints in [0, m), little-endian
(index j holds the coefficient of T^j).  The zero polynomial is [].
Nothing here is performance critical except multiplication mod a fixed
monic modulus, which the Witt layer handles itself with precomputed
reduction tables.
"""

from functools import reduce


def trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def padd(a, b, m):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % m
    return trim(out)


def psub(a, b, m):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % m
    return trim(out)


def pmul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return trim([c % m for c in out])


def pscale(a, c, m):
    c %= m
    return trim([x * c % m for x in a])


def pdivmod(a, b, m):
    """Divide by a polynomial with unit leading coefficient."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    binv = pow(b[-1], -1, m)
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * binv % m
        if c:
            q[i] = c
            for j, cb in enumerate(b):
                a[i + j] = (a[i + j] - c * cb) % m
    return trim(q), trim(a)


def pmod(a, b, m):
    return pdivmod(a, b, m)[1]


def ppowmod(a, n, b, m):
    """a**n mod (b, m) by square and multiply."""
    result = [1]
    a = pmod(a, b, m)
    while n:
        if n & 1:
            result = pmod(pmul(result, a, m), b, m)
        a = pmod(pmul(a, a, m), b, m)
        n >>= 1
    return result


def pgcd(a, b, p):
    """Monic gcd over the field F_p."""
    a, b = list(a), list(b)
    while b:
        a, b = b, pmod(a, b, p)
    if a:
        a = pscale(a, pow(a[-1], -1, p), p)
    return a


def pgcdext(a, b, p):
    """Extended gcd over F_p: returns (g, u, v) with u*a + v*b = g, g monic."""
    r0, r1 = list(a), list(b)
    u0, u1 = [1], []
    v0, v1 = [], [1]
    while r1:
        q, r = pdivmod(r0, r1, p)
        r0, r1 = r1, r
        u0, u1 = u1, psub(u0, pmul(q, u1, p), p)
        v0, v1 = v1, psub(v0, pmul(q, v1, p), p)
    if r0:
        c = pow(r0[-1], -1, p)
        r0, u0, v0 = pscale(r0, c, p), pscale(u0, c, p), pscale(v0, c, p)
    return r0, u0, v0


def is_prime(n):
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    # deterministic Miller-Rabin for the word-size inputs we ever see
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n):
    """Prime factorization by trial division (inputs stay modest)."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_irreducible(f, p):
    """Rabin test for a monic polynomial over F_p."""
    d = len(f) - 1
    if d < 1:
        return False
    x = pmod([0, 1], f, p)
    # T^(p^d) == T mod f
    h = x
    for _ in range(d):
        h = ppowmod(h, p, f, p)
    if psub(h, x, p):
        return False
    for r in factorize(d):
        h = x
        for _ in range(d // r):
            h = ppowmod(h, p, f, p)
        if len(pgcd(psub(h, x, p), f, p)) > 1:
            return False
    return True


def is_primitive(f, p):
    """True when the residue of T mod f generates F_{p^d}^* (f irreducible)."""
    d = len(f) - 1
    order = p ** d - 1
    if not f[0]:
        return False
    for r in factorize(order):
        if ppowmod([0, 1], order // r, f, p) == [1]:
            return False
    return True


def smallest_primitive(p, d):
    """Lexicographically smallest monic primitive polynomial of degree d over F_p.

    Candidates are ordered by the integer sum(c_j * p^j) over the lower
    coefficients, which makes the choice reproducible across runs.
    """
    for n in range(p ** d):
        coeffs = []
        t = n
        for _ in range(d):
            coeffs.append(t % p)
            t //= p
        f = coeffs + [1]
        if is_irreducible(f, p) and is_primitive(f, p):
            return f
    raise RuntimeError("no primitive polynomial found (impossible for prime p)")


def teichmuller_modulus(mu, p, N):
    """Lift an irreducible mu over F_p to the monic factor m of T^(q-1) - 1 over Z/p^N.

    The lift is computed as the characteristic polynomial of the Teichmuller
    unit above the residue of T, so only O(d) ring operations are needed;
    m is the unique monic lift of mu whose roots are (q-1)-th roots of unity.
    """
    d = len(mu) - 1
    q = p ** d
    m = p ** N
    if N == 1:
        return [c % p for c in mu]
    m0 = list(mu)  # any monic lift defines the unramified ring Z/p^N[x]/(m0)

    def rmul(a, b):
        return pmod(pmul(a, b, m), m0, m)

    def rpow(a, n):
        r = [1]
        while n:
            if n & 1:
                r = rmul(r, a)
            a = rmul(a, a)
            n >>= 1
        return r

    # Teichmuller lift of the residue of x: iterate q-th powers to the fixpoint.
    w = [0, 1]
    for _ in range(N + 1):
        w2 = rpow(w, q)
        if w2 == w:
            break
        w = w2
    # minimal polynomial = prod over Frobenius conjugates w^(p^j)
    conj = []
    c = w
    for _ in range(d):
        conj.append(c)
        c = rpow(c, p)
    poly = [[1]]  # polynomial in T with coefficients in the ring
    for cj in conj:
        new = [[] for _ in range(len(poly) + 1)]
        for i, coef in enumerate(poly):
            new[i + 1] = padd(new[i + 1], coef, m)
            new[i] = psub(new[i], rmul(coef, cj), m)
        poly = new
    out = []
    for coef in poly:
        if len(coef) > 1:
            raise RuntimeError("Teichmuller modulus has a non-scalar coefficient")
        out.append(coef[0] if coef else 0)
    return out


def crandom(rng, p, d):
    """Random coefficient list of length d over F_p."""
    return trim([rng.randrange(p) for _ in range(d)])
