import numpy as np
import pytest

from dieumod import DomainError
from dieumod.hecke import (
    SmallField, build_setting, enumerate_stable_planes, compare_variety,
    chart_equations_hold, parametrized_chart_set, probe_report,
)


class TestSmallField:
    def test_tables(self):
        K = SmallField(3, 2)
        # field axioms sampled over whole (tiny) field
        e = K.elements()
        for a in e:
            assert K.ADD[a, K.NEG[a]] == 0
            assert K.MUL[a, 1] == a
            for b in e:
                assert K.ADD[a, b] == K.ADD[b, a]
                assert K.MUL[a, b] == K.MUL[b, a]
        # distributivity on a sample grid
        A, B, C = np.meshgrid(e, e, e[:3], indexing="ij")
        lhs = K.MUL[A, K.ADD[B, C]]
        rhs = K.ADD[K.MUL[A, B], K.MUL[A, C]]
        assert (lhs == rhs).all()

    def test_frobenius_tables(self):
        K = SmallField(3, 2)
        for a in K.elements():
            assert K.FROB[K.FROBINV[a]] == a
            assert K.FROB[K.MUL[a, a]] == K.MUL[K.FROB[a], K.FROB[a]]


class TestSetting:
    def test_validation(self):
        with pytest.raises(DomainError):
            build_setting(2)
        with pytest.raises(DomainError):
            build_setting(4)
        build_setting(3)

    def test_operator_identities(self):
        S = build_setting(3)
        v = tuple(np.int64(x) for x in (1, 2, 5, 7))
        pi2 = S.pi_map(S.pi_map(v))
        assert all(int(c) == 0 for c in pi2)
        fv = S.f_map(S.v_map(v))
        assert all(int(c) == 0 for c in fv)


class TestEnumeration:
    def test_p3_counts_and_equations(self):
        S = build_setting(3)
        planes = enumerate_stable_planes(S)
        assert len(planes) == 33
        rep = compare_variety(S, planes)
        assert rep["count_matches"]
        assert rep["all_chart_equations_hold"]
        assert rep["displayed_polynomials_hold"]
        assert rep["lines_through_origin"] == 4
        assert rep["parametrization_matches"]
        assert rep["variety_point_count"] == 41
        assert len(rep["extra_variety_points"]) == 8
        assert rep["extra_points_on_t1_t2_zero"]

    def test_isotropy_trace_condition(self):
        S = build_setting(3)
        K = S.field
        for pl in enumerate_stable_planes(S):
            t11, _, _, t22 = pl.chart
            assert int(K.ADD[np.int64(t11), np.int64(t22)]) == 0

    def test_parametrized_set_is_exact(self):
        S = build_setting(3)
        got = {pl.chart for pl in enumerate_stable_planes(S)}
        assert got == parametrized_chart_set(S)

    def test_full_grassmannian_contains_chart(self):
        S = build_setting(3)
        chart = {pl.rref for pl in enumerate_stable_planes(S)}
        full = enumerate_stable_planes(S, chart_only=False)
        rrefs = {pl.rref for pl in full}
        assert chart <= rrefs
        outside = [pl for pl in full if pl.chart is None]
        # the leftover stable planes are limits of the chart lines: their
        # echelon pivots degenerate out of the (1, 2) columns
        assert len(outside) == S.p + 1
        for pl in outside:
            assert pl.rref[0][:2] != (1, 0) or pl.rref[1][:2] != (0, 1)

    def test_equations_reject_nonsolutions(self):
        S = build_setting(3)
        assert not chart_equations_hold(S, (1, 0, 0, 0))

    def test_p5_report(self):
        rep = probe_report(5)
        assert rep["enumerated"] == 145
        assert rep["count_matches"] and rep["all_chart_equations_hold"]
        assert rep["lines_through_origin"] == 6
        assert rep["variety_point_count"] == 25 + 6 * 24

    def test_size_guard(self):
        with pytest.raises(DomainError, match="cap"):
            enumerate_stable_planes(build_setting(5), size_cap=10)
