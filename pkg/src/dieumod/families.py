"""Builders for the explicit module families.

All builders fix the pairing scalars by propagating
det(A[i]) * delta[i] = p * sigma(delta[i-1]) from delta[0].  Around the full
cycle this leaves a sign (-1)^t, t the number of antidiagonal-type slots; an
odd sign is absorbed into delta[0] by a Teichmuller scalar zeta with
zeta^(p^f) = -zeta when the working field contains one (ext even), and the
module is emitted without a pairing otherwise, flagged on `pairing_note`.
"""

import warnings

from .wittring import DomainError
from .modules import DModule


def _pairing_scalars(tower, signs):
    """delta[i] for slot signs s_i = p/det(A_i) in {+1, -1}.

    Returns (deltas, note); deltas is None when the sign cannot be absorbed.
    """
    f = tower.f
    total = 1
    for s in signs:
        total *= s
    if total == 1:
        delta0 = tower.one()
    else:
        if tower.p == 2:
            return None, "no pairing: sign -1 is not a Teichmuller scalar at p = 2"
        order = tower.q - 1
        need = 2 * (tower.p ** f - 1)
        if order % need:
            return None, ("no pairing: the working field has no scalar with "
                          "sigma^f(z) = -z; use an even base-field extension")
        zeta = tower.residue_field.gen_pow(order // need)
        delta0 = tower.ram(tower.teichmuller(zeta))
    deltas = [delta0]
    for i in range(1, f):
        prev = deltas[-1].sigma()
        deltas.append(prev if signs[i] == 1 else -prev)
    return deltas, None


def _attach(module, family, deltas_note):
    module.family = family
    module.pairing_note = deltas_note
    return module


def slope_family(tower, a):
    """The explicit Rapoport-locus family realizing Newton index a.

    Writing a = d*e + r with 0 <= r < e, the slots carry
    [[0,1],[-p,0]] (2d of them), [[1,1],[-p,0]], ..., and a final
    [[pi^r,1],[-p,0]]; it needs 2d+1 <= f, or 2d = f with r = 0 (the
    supersingular extreme, where every slot is antidiagonal).
    """
    g = tower.g
    e, f, p = tower.e, tower.f, tower.p
    if not (isinstance(a, int) and 0 <= 2 * a <= g):
        raise DomainError("bad-shape", f"need an integer 0 <= a <= g/2, got {a}")
    d, r = divmod(a, e)
    if not (2 * d + 1 <= f or (2 * d == f and r == 0)):
        raise DomainError("bad-shape",
                          f"a = {a} = {d}*e + {r} does not fit f = {f} slots "
                          f"(need 2d+1 <= f, or 2d = f with r = 0)")
    rot = [[tower.zero(), tower.one()], [tower.ram(-p), tower.zero()]]
    mix = [[tower.one(), tower.one()], [tower.ram(-p), tower.zero()]]
    last = [[tower.pi_pow(r), tower.one()], [tower.ram(-p), tower.zero()]]
    mats = [None] * f
    for i in range(1, f + 1):  # paper-style 1-based slots, A_f stored at 0
        if i <= 2 * d:
            m = rot
        elif i < f:
            m = mix
        else:
            m = last if 2 * d < f else rot
        mats[i % f] = m
    deltas = [tower.one()] * f  # every det is exactly p
    module = DModule(tower, mats, deltas, "separable")
    return _attach(module, {"kind": "slope", "a": a}, None)


def normal_form(tower, tau, c=None):
    """Rapoport-locus normal form with a-index tau.

    For i in tau the slot matrix is [[c_i * pi, 1], [pi^e, 0]] and the slot
    a-invariant is a^i = min(e, ord_pi(c_i * pi)); other slots are
    diag(1, pi^e).  c maps tau to ring elements (0 allowed, giving a^i = e);
    an empty tau yields the split ordinary module.
    """
    e, f = tower.e, tower.f
    tau = tuple(sorted(set(i % f for i in tau)))
    c = {} if c is None else dict(c)
    if set(c) != set(tau):
        raise DomainError("bad-shape", "coefficient map must have exactly the slots of tau")
    pi = tower.pi()
    entries = {i: tower.ram(c[i]) * pi for i in tau}
    mats = []
    signs = []
    for i in range(f):
        if i in entries:
            mats.append([[entries[i], tower.one()], [tower.pi_pow(e), tower.zero()]])
            signs.append(-1)
        else:
            mats.append([[tower.one(), tower.zero()], [tower.zero(), tower.pi_pow(e)]])
            signs.append(1)
    deltas, note = _pairing_scalars(tower, signs)
    module = DModule(tower, mats, deltas, "separable")
    return _attach(module, {"kind": "normal", "tau": tau, "entries": entries}, note)


def ordinary_module(tower):
    return normal_form(tower, ())


def superspecial(tower, e1=None, e2=None, variant="general"):
    """Superspecial modules (a-number = g).

    rapoport: F X_i = -Y_{i+1}, F Y_i = p X_{i+1}; a-type (e, ..., e).
    general:  F X_i = -pi^(x_i) Y_{i+1}, F Y_i = pi^(y_i) X_{i+1} with
              (x, y) = (e1, e2) at every slot for odd f (and e1 + e2 = e),
              alternating with (e-e2, e-e1) for even f; pairing scalars are
              exact pi powers.
    """
    e, f = tower.e, tower.f
    if variant == "rapoport":
        mats = [[[tower.zero(), -tower.one()], [tower.ram(tower.p), tower.zero()]]
                for _ in range(f)]
        deltas = [tower.one()] * f
        module = DModule(tower, mats, deltas, "separable")
        return _attach(module, {"kind": "superspecial", "variant": variant}, None)
    if variant != "general":
        raise DomainError("bad-shape", f"unknown variant {variant!r}")
    if e1 is None or e2 is None or not (0 <= e1 <= e and 0 <= e2 <= e):
        raise DomainError("bad-shape", "need exponents 0 <= e1, e2 <= e")
    if f % 2 and e1 + e2 != e:
        raise DomainError("bad-shape", "odd f needs e1 + e2 = e")
    mats = []
    for i in range(f):
        # slot i receives F from slot i-1; even source slots use (e-e2, e-e1)
        src_even = (i - 1) % 2 == 0
        if f % 2 or not src_even:
            x, y = e1, e2
        else:
            x, y = e - e2, e - e1
        mats.append([[tower.zero(), -tower.pi_pow(x)], [tower.pi_pow(y), tower.zero()]])
    n = max(0, e1 + e2 - e)
    if f % 2:
        deltas = [tower.pi_pow(n)] * f
    else:
        deltas = [tower.pi_pow(n) if i % 2 else tower.pi_pow(n + e - e1 - e2)
                  for i in range(f)]
    mode = "separable" if (f % 2 or e1 + e2 == e) else "general"
    module = DModule(tower, mats, deltas, mode)
    return _attach(module, {"kind": "superspecial", "variant": variant,
                            "e1": e1, "e2": e2}, None)


def deform_specialize(base, target_atype, assignment):
    """Specialize the universal deformation of a normal-form module over the
    stratum of a-types >= target.

    The deformation coordinates are (i, j) with target[i] <= j < e, flattened
    as k = e*i + j; values are residue-field elements, lifted to Teichmuller
    scalars T_{i,j}.  Slot matrices become [[T_i, 1], [pi^e, 0]] on tau and
    [[1, 0], [T_i pi^e, pi^e]] elsewhere, with T_i the window sum
    (plus the base coefficient on tau).
    """
    tower = base.tower
    fam = getattr(base, "family", None)
    if not fam or fam.get("kind") != "normal":
        raise DomainError("bad-shape", "base must come from normal_form")
    e, f = tower.e, tower.f
    tau, entries = fam["tau"], fam["entries"]
    target = tuple(target_atype)
    if len(target) != f or any(not (0 <= t <= e) for t in target):
        raise DomainError("bad-shape", "target a-type must be f slot values in [0, e]")
    for i in range(f):
        base_ai = min(e, entries[i].ord_lower()) if i in tau else 0
        if target[i] > base_ai:
            raise DomainError("bad-shape",
                              f"target a^({i}) = {target[i]} exceeds the base value {base_ai}")
    want = {(i, j) for i in range(f) for j in range(target[i], e)}
    if set(assignment) != want:
        raise DomainError("key-mismatch",
                          f"assignment keys must be exactly {sorted(want)}")
    pi = tower.pi()
    mats, signs = [], []
    for i in range(f):
        Ti = tower.zero()
        for j in range(target[i], e):
            val = assignment[(i, j)]
            lift = tower.ram(tower.teichmuller(val))
            if lift:
                Ti = Ti + lift * tower.pi_pow(j)
        if i in tau:
            Ti = Ti + entries[i]
            mats.append([[Ti, tower.one()], [tower.pi_pow(e), tower.zero()]])
            signs.append(-1)
        else:
            mats.append([[tower.one(), tower.zero()],
                         [Ti * tower.pi_pow(e), tower.pi_pow(e)]])
            signs.append(1)
    deltas, note = _pairing_scalars(tower, signs)
    module = DModule(tower, mats, deltas, "separable")
    return _attach(module, {"kind": "deform", "tau": tau, "target": target}, note)


def nonrapoport_module(tower):
    """The rank-2 module with F X = pi Y, F Y = pi X over pi^2 = p:
    superspecial and supersingular but violating the Rapoport condition.
    Wants an odd prime; p = 3 is accepted with a warning."""
    if tower.e != 2 or tower.f != 1:
        raise DomainError("bad-shape", "this module lives at e = 2, f = 1")
    if tower.p == 2:
        raise DomainError("bad-shape", "p must be odd")
    if tower.p == 3:
        warnings.warn("p = 3 is outside the intended p > 3 range; proceeding anyway")
    pi = tower.pi()
    mats = [[[tower.zero(), pi], [pi, tower.zero()]]]
    deltas, note = _pairing_scalars(tower, [-1])  # det = -pi^2 = -p
    module = DModule(tower, mats, deltas, "separable")
    return _attach(module, {"kind": "nonrapoport"}, note)


def sample_deform(tower, tau, target, trials, rng, newton_method="fast"):
    """Random Teichmuller specializations over the target stratum; returns a
    histogram {newton index: count} plus the builder inputs echoed back."""
    from .invariants import newton_point

    e, f = tower.e, tower.f
    tau = tuple(sorted(set(i % f for i in tau)))
    target = tuple(target)
    c = {}
    for i in tau:
        ai = target[i] if target[i] else 1
        c[i] = tower.pi_pow(ai - 1)  # entry c_i * pi has valuation exactly ai
    base = normal_form(tower, tau, c)
    hist = {}
    for _ in range(trials):
        assignment = {}
        for i in range(f):
            for j in range(target[i], e):
                assignment[(i, j)] = tower.residue_field.random_unit(rng)
        M = deform_specialize(base, target, assignment)
        idx = newton_point(M, newton_method).index
        hist[idx] = hist.get(idx, 0) + 1
    return {"trials": trials, "tau": list(tau), "target": list(target),
            "slope_histogram": {str(k): v for k, v in sorted(hist.items())}}
