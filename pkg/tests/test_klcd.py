from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bruhatcd.klcd import (
    AVector,
    K_map,
    RouteMismatch,
    a_from_p,
    a_last,
    a_vector,
    antisymmetric_part,
    antisymmetric_routes,
    ballot,
    catalan,
    chaininject_holds,
    conjecture_record,
    conjecture_scan,
    g_dual,
    is_even_word,
    kl_from_cd,
    p1_two_ways,
    p_from_a,
    psi_alpha,
    upsilon,
    upsilon_lattice,
    word_catalan,
    xi_via_theta,
    xi_w,
)
from bruhatcd.klcore import kl_polynomial
from bruhatcd.polyalg import HalfLaurent, IntPoly, QSymVec, cd_words, compositions
from bruhatcd.qsym import complete_cd_index, f_tilde

EX24 = {"cccc": 1, "dcc": 1, "cdc": 2, "ccd": 2, "dd": 2, "cc": 2, "": 1}


def nonneg_paths(k):
    for steps in product((1, -1), repeat=k):
        h, ok = 0, True
        for s in steps:
            h += s
            ok &= h >= 0
        if ok:
            yield steps


class TestNumbers:
    def test_catalan(self):
        assert [catalan(i) for i in range(4)] == [1, 1, 2, 5]
        assert catalan(Fraction(1, 2)) == 0 and catalan(-1) == 0 and catalan(2.5) == 0

    @pytest.mark.parametrize("i", range(7))
    def test_catalan_counts_dyck_paths(self, i):
        dyck = sum(1 for p in nonneg_paths(2 * i) if sum(p) == 0)
        assert catalan(i) == dyck

    def test_ballot_examples(self):
        assert ballot(4).negate_var() == IntPoly([1, -3, 2])
        assert ballot(2).negate_var() == IntPoly([1, -1])
        assert ballot(0) == IntPoly(1)

    @pytest.mark.parametrize("k", range(10))
    def test_ballot_counts_nonnegative_paths(self, k):
        oracle = {}
        for p in nonneg_paths(k):
            downs = p.count(-1)
            oracle[downs] = oracle.get(downs, 0) + 1
        assert ballot(k) == IntPoly(oracle)


class TestPsiUpsilon:
    def test_psi_examples(self):
        for n in range(1, 5):
            assert psi_alpha((n,)) == IntPoly([-1, 1]) ** n
        assert psi_alpha((1, 1)) == IntPoly([1, -1])

    def test_empty(self):
        with pytest.raises(ValueError):
            psi_alpha(())
        with pytest.raises(ValueError):
            upsilon(())

    @pytest.mark.parametrize("n", range(1, 7))
    def test_two_upsilon_routes(self, n):
        for beta in compositions(n):
            assert upsilon(beta) == upsilon_lattice(beta), beta


class TestK:
    def test_cover(self, S3):
        F = f_tilde(S3, S3.identity, S3.parse("213"))
        assert K_map(F) == HalfLaurent({-1: 1, 1: -1})

    def test_example(self, ex24):
        # q^{-5/2}(1+q) - q^{5/2}(1 + 1/q)
        want = HalfLaurent({-5: 1, -3: 1, 3: -1, 5: -1})
        assert K_map(f_tilde(*ex24)) == want

    def test_linear(self):
        assert K_map(QSymVec("L", {})) == HalfLaurent()

    def test_rejects_m_basis(self):
        with pytest.raises(ValueError):
            K_map(QSymVec("M", {(1,): 1}))


class TestXi:
    def test_empty_word(self):
        assert xi_w("") == HalfLaurent({-1: 1, 1: -1})

    def test_odd_trailing_run_vanishes(self):
        assert not is_even_word("cdc")
        assert xi_w("cdc") == HalfLaurent()
        assert word_catalan("dcc") == 1 and word_catalan("dcccc") == 2

    @pytest.mark.parametrize("n", range(7))
    def test_closed_form(self, n):
        for w in cd_words(n):
            assert xi_w(w) == xi_via_theta(w), w


class TestAntisymmetric:
    def test_s3(self, S3):
        got = antisymmetric_part(S3, S3.identity, S3.longest)
        assert got == HalfLaurent({-3: 1, 3: -1})

    def test_cover(self, S3):
        assert antisymmetric_part(S3, S3.identity, S3.parse("132")) == HalfLaurent({-1: 1, 1: -1})

    def test_all_routes_s4(self, S4):
        for u, v in S4.comparable_pairs():
            routes = antisymmetric_routes(S4, u, v)
            assert len(set(map(str, routes.values()))) == 1

    def test_mismatch_is_reported(self, ex24, monkeypatch):
        import bruhatcd.klcd as mod

        real = mod.complete_cd_index

        def corrupted(*a, **k):
            psi = real(*a, **k)
            return type(psi)({**psi.poly, "dd": psi.poly["dd"] + 1}, psi.interval, psi.top_degree)

        monkeypatch.setattr(mod, "complete_cd_index", corrupted)
        with pytest.raises(RouteMismatch) as ei:
            antisymmetric_part(*ex24)
        assert "Xi_w" in ei.value.identity

    def test_trivial_rejected(self, S3):
        with pytest.raises(ValueError):
            antisymmetric_part(S3, S3.identity, S3.identity)


class TestAVector:
    def test_examples(self, S3):
        a = a_vector(EX24, 5)
        assert list(a) == [1, 4, 2] and a.n == 4
        assert kl_from_cd(EX24, 5) == IntPoly([1, 1])
        b = a_vector({"cc": 1, "": 1}, 3)
        assert list(b) == [1, 1]
        assert b.kl() == IntPoly(1)

    def test_a0_is_top_power_of_c(self, S4):
        for u, v in S4.comparable_pairs():
            l = S4.length(v) - S4.length(u)
            psi = complete_cd_index(S4, u, v)
            assert a_vector(psi.poly, l)[0] == psi["c" * (l - 1)]

    def test_s5_pair(self, S5):
        for a, b, want in (("12435", "53142", "1"), ("31254", "53421", "q+1")):
            u, v = S5.parse(a), S5.parse(b)
            assert str(kl_from_cd(complete_cd_index(S5, u, v).poly, 6)) == want

    def test_g_dual(self):
        assert g_dual(EX24, 5) == IntPoly([1, -1, 1])
        assert g_dual({"cc": 1, "": 1}, 3) == IntPoly([1, -1])
        for l in range(1, 8):
            for w in cd_words(l - 1):
                assert g_dual({w: 1}, l).degree <= (l - 1) // 2

    def test_conversions(self):
        a = AVector((1, 4, 2), 4)
        assert p_from_a(a) == IntPoly([1, 1])
        assert a_from_p(IntPoly([1, 1]), 4) == a
        assert a_last(IntPoly([1, 1]), 5) == 2
        # even length: derivative of q^(l/2) P(1/q) at 1
        assert a_last(IntPoly([1, 1]), 4) == 2 * 1 + 1 * 1

    @given(st.integers(0, 8).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(-9, 9), min_size=n // 2 + 1, max_size=n // 2 + 1))))
    def test_round_trip(self, na):
        n, entries = na
        a = AVector(tuple(entries), n)
        assert a_from_p(p_from_a(a), n) == a
        assert p_from_a(a) == a.kl()

    def test_last_entry_matches_kl(self, S4):
        for u, v in S4.comparable_pairs():
            l = S4.length(v) - S4.length(u)
            P = kl_polynomial(S4, u, v)
            assert a_vector(complete_cd_index(S4, u, v).poly, l)[-1] == a_last(P, l)


class TestP1:
    def test_example(self, ex24):
        assert p1_two_ways(*ex24) == (1, 1)

    def test_s3(self, S3):
        assert p1_two_ways(S3, S3.identity, S3.longest) == (0, 0)

    def test_short_interval_rejected(self, S3):
        with pytest.raises(ValueError):
            p1_two_ways(S3, S3.identity, S3.parse("213"))

    def test_s4(self, S4):
        for u, v in S4.comparable_pairs():
            if S4.length(v) - S4.length(u) >= 2:
                p1 = kl_polynomial(S4, u, v)[1]
                assert p1_two_ways(S4, u, v) == (p1, p1)


class TestScan:
    def test_record(self, ex24):
        r = conjecture_record(*ex24)
        assert r["a_vector"] == [1, 4, 2] and r["a_min"] == 1
        assert r["cd_min"] == 0 and r["chaininject_ok"] and r["p1_check_ok"]

    def test_chaininject_example(self, ex24):
        # 2^4 [c^4] = 16 <= 64 paths of length 5
        assert chaininject_holds(*ex24)

    def test_s4_has_no_violations(self, S4):
        s = conjecture_scan(conjecture_record(S4, u, v) for u, v in S4.comparable_pairs())
        assert s["intervals"] == 189
        assert s["cd_violations"] == s["a_violations"] == s["chaininject_violations"] == 0
        assert s["p1_failures"] == 0
