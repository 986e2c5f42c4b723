from fractions import Fraction

import pytest

from dieumod import (
    DomainError, lie_type, a_type, a_index, newton_point, classify,
)
from dieumod import families as fam
from dieumod.modp import smith_exponents
from dieumod.invariants import _slot_rows
from conftest import tower


class TestSlopeFamily:
    @pytest.mark.parametrize("e,f", [(1, 3), (2, 2), (1, 4), (3, 1)])
    def test_realizes_indices(self, e, f):
        t = tower(3, f, e, slack=20)
        g = e * f
        for a in range(g // 2 + 1):
            d, r = divmod(a, e)
            if not (2 * d + 1 <= f or (2 * d == f and r == 0)):
                continue
            M = fam.slope_family(t, a)
            assert newton_point(M, "fast").index == a
            assert newton_point(M, "oracle").index == a
            assert lie_type(M).is_rapoport

    def test_every_admissible_integer_fits(self):
        # extending the construction to 2d = f (all-rotation, r = 0) makes
        # every integer 0 <= a <= g/2 buildable
        for e, f in ((1, 2), (2, 2), (2, 4), (3, 2)):
            t = tower(3, f, e)
            for a in range(e * f // 2 + 1):
                fam.slope_family(t, a)

    def test_shape_errors(self):
        t = tower(3, 2, 2)
        with pytest.raises(DomainError):
            fam.slope_family(t, 3)  # 3 > g/2
        with pytest.raises(DomainError):
            fam.slope_family(t, -1)


class TestNormalForm:
    def test_roundtrip_a_index(self, rng):
        t = tower(3, 4, 2, ext=2)
        tau = (0, 2)
        c = {0: t.pi(), 2: t.random_ram_unit(rng)}
        M = fam.normal_form(t, tau, c)
        got_tau, tcount, reduced = a_index(M)
        assert got_tau == tau and tcount == 2 and reduced == 2
        a = a_type(M)
        for i, (lo, hi) in enumerate(a.pairs):
            expected = min(2, (c[i] * t.pi()).ord_lower()) if i in tau else 0
            assert (lo, hi) == (0, expected)

    def test_empty_tau_is_ordinary(self):
        t = tower(3, 2, 2)
        M = fam.normal_form(t, ())
        assert classify(M)["ordinary"]

    def test_coefficient_key_mismatch(self):
        t = tower(3, 2, 2)
        with pytest.raises(DomainError, match="tau"):
            fam.normal_form(t, (0,), {1: t.pi()})

    def test_pairing_note_when_no_scalar_exists(self):
        # odd reduced a-number needs sigma^f(z) = -z, impossible at ext = 1
        t = tower(3, 2, 1, ext=1)
        M = fam.normal_form(t, (0,), {0: t.zero()})
        assert M.delta is None and M.pairing_note is not None


class TestSuperspecial:
    def test_rapoport_variant(self):
        t = tower(3, 3, 2, ext=2)
        M = fam.superspecial(t, variant="rapoport")
        assert a_type(M).rapoport_form == (2, 2, 2)
        assert classify(M)["superspecial"]

    def test_fm_equals_vm(self):
        # superspecial means the F- and V-spans agree slotwise mod p
        for args in ((3, 3, 2, (1, 1)), (3, 2, 2, (0, 1)), (3, 1, 3, (1, 2))):
            p, f, e, (e1, e2) = args
            t = tower(p, f, e, ext=2)
            if f % 2 and e1 + e2 != e:
                continue
            M = fam.superspecial(t, e1, e2, "general")
            for i in range(f):
                frows = _slot_rows(M.fbar_matrix(i))
                vrows = _slot_rows(M.vbar_matrix((i + 1) % f, with_unit=False))
                df = smith_exponents(frows, e)
                dv = smith_exponents(vrows, e)
                ds = smith_exponents(frows + vrows, e)
                assert df == dv == ds

    def test_f_even_alternating_pattern(self):
        t = tower(3, 2, 2, ext=2)
        M = fam.superspecial(t, 0, 1, "general")
        assert lie_type(M).pairs == ((0, 1), (1, 2))
        assert a_type(M).pairs == ((0, 1), (1, 2))

    def test_odd_f_needs_balanced_exponents(self):
        t = tower(3, 3, 2, ext=2)
        with pytest.raises(DomainError):
            fam.superspecial(t, 0, 1, "general")


class TestDeform:
    def test_zero_assignment_restores_base(self):
        t = tower(3, 2, 2, ext=2)
        base = fam.normal_form(t, (0,), {0: t.pi()})
        target = tuple(min(2, (base.family["entries"].get(i, t.zero()).ord_lower())
                           if i in base.family["tau"] else 0) for i in range(2))
        F = t.residue_field
        asg = {(i, j): F.zero() for i in range(2) for j in range(target[i], 2)}
        M = fam.deform_specialize(base, target, asg)
        assert M.matrices == base.matrices

    def test_key_mismatch_rejected(self):
        t = tower(3, 2, 2, ext=2)
        base = fam.normal_form(t, (0,), {0: t.pi()})
        with pytest.raises(DomainError, match="keys"):
            fam.deform_specialize(base, (0, 0), {(0, 0): t.residue_field.zero()})

    def test_target_above_base_rejected(self):
        t = tower(3, 2, 2, ext=2)
        base = fam.normal_form(t, (0,), {0: t.pi()})  # base a-type (2, 0)
        F = t.residue_field
        asg = {(1, j): F.zero() for j in range(1, 2)}
        asg.update({(0, j): F.zero() for j in range(2)})
        with pytest.raises(DomainError, match="exceeds"):
            fam.deform_specialize(base, (0, 1), asg)

    def test_flattened_strata(self):
        # zeroing t_0..t_(m-1) with t_m a unit gives Newton index m
        t = tower(3, 3, 2, ext=2, slack=0)
        base = fam.normal_form(t, (0,), {0: t.zero()})
        F = t.residue_field
        for m in range(0, 4):
            asg = {}
            for i in range(3):
                for j in range(2):
                    k = 2 * i + j
                    asg[(i, j)] = F.one() if k == m else F.zero()
            M = fam.deform_specialize(base, (0, 0, 0), asg)
            assert newton_point(M, "fast").index == min(Fraction(3), Fraction(m))

    def test_prop_superspecial_deformation_reaches_bound(self, rng):
        # from the all-slots base with small targets, random specializations
        # attain index |target| with positive frequency
        t = tower(3, 2, 2, ext=4)
        base = fam.normal_form(t, (0, 1), {0: t.zero(), 1: t.zero()})
        target = (1, 1)  # a^i <= floor(e/2)
        hits = 0
        for _ in range(60):
            asg = {(i, j): t.residue_field.random_unit(rng)
                   for i in range(2) for j in range(target[i], 2)}
            M = fam.deform_specialize(base, target, asg)
            if newton_point(M, "fast").index == 2:
                hits += 1
        assert hits > 0

    def test_sample_deform_histogram(self, rng):
        t = tower(3, 2, 1, ext=4)
        out = fam.sample_deform(t, (0,), (1, 0), 40, rng)
        assert out["trials"] == 40
        assert sum(out["slope_histogram"].values()) == 40
        assert out["slope_histogram"].get("1", 0) >= 30  # spaced target, index 1 generic


class TestPiSwapExample:
    def test_shape_validation(self):
        t = tower(3, 2, 2)
        with pytest.raises(DomainError):
            fam.nonrapoport_module(t)  # f must be 1

    def test_warns_at_p3(self):
        t = tower(3, 1, 2, ext=2)
        with pytest.warns(UserWarning):
            M = fam.nonrapoport_module(t)
        assert classify(M)["superspecial"]

    def test_full_profile(self):
        t = tower(5, 1, 2, ext=2)
        M = fam.nonrapoport_module(t)
        assert lie_type(M).pairs == ((1, 1),)
        assert a_type(M).pairs == ((1, 1),)
        assert newton_point(M).index == 1
        assert M.delta is not None
