from bruhatcd.coxeter import CoxeterSystem
from bruhatcd.suites import (
    CONJECTURES,
    FLIPS,
    IDENTITY,
    Check,
    interval_checks,
    product_suite,
    run_checks,
    sample_pairs,
)


def test_identity_keys():
    assert [c.key for c in IDENTITY] == list("abcdefghijklm")


def test_s3_all_suites(S3):
    for suite in (IDENTITY, FLIPS, CONJECTURES):
        for rep in run_checks(S3, S3.comparable_pairs(), suite):
            assert rep.ok, rep.failures
            assert rep.checked == 13


def test_failures_are_collected(S3):
    def bad(W, u, v):
        raise ArithmeticError("boom")

    rep = run_checks(S3, S3.comparable_pairs()[:2], [Check("x", "always fails", bad)])[0]
    assert not rep.ok and len(rep.failures) == 2 and "boom" in rep.failures[0]
    assert "FAIL (2)" in rep.line()


def test_interval_checks_shape(ex24):
    res = interval_checks(*ex24, IDENTITY)
    assert len(res) == 13 and all(ok for ok, _ in res)


def test_sample_is_seeded_and_canonical(S5):
    a, b = sample_pairs(S5, 50, 7), sample_pairs(S5, 50, 7)
    assert a == b and len(a) == 50 and len(set(a)) == 50
    order = {p: i for i, p in enumerate(S5.comparable_pairs())}
    assert [order[p] for p in a] == sorted(order[p] for p in a)
    assert sample_pairs(S5, 50, 8) != a


def test_parallel_matches_serial(S4):
    pairs = S4.comparable_pairs()[:30]
    s = run_checks(S4, pairs, IDENTITY, jobs=1)
    p = run_checks(S4, pairs, IDENTITY, jobs=2)
    assert [(r.key, r.checked, r.failures) for r in s] == [(r.key, r.checked, r.failures) for r in p]


def test_product_suite():
    W = CoxeterSystem.parse_name("S2xS3")
    reps = product_suite(W)
    assert all(r.ok and r.checked == len(W.comparable_pairs(strict=False)) for r in reps)
