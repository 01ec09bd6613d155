from collections import Counter
from itertools import combinations

import pytest

from bruhatcd.brupaths import (
    b_stats,
    bruhat_graph,
    c_from_b,
    c_via_chains,
    descent_composition,
    flip2,
    flip_at,
    increasing_paths,
    iter_paths,
    length2_paths,
    make_path,
    phi_injection,
)
from bruhatcd.coxeter import LEX, REVLEX, IncomparableError
from bruhatcd.klcore import r_tilde
from bruhatcd.polyalg import mask_to_composition, subset_to_composition

from test_coxeter import inversions


def oracle_stats(W, u, v, reverse=False):
    """Descent compositions of every Bruhat path from u to v, found by a
    plain DFS that swaps values and compares the swapped pairs."""
    lv = inversions(v)
    leq = W.bruhat_leq
    out = Counter()

    def dfs(x, labels):
        if x == v:
            k = len(labels)
            desc = {i for i in range(1, k) if (labels[i - 1] > labels[i]) != reverse}
            out[subset_to_composition(desc, k)] += 1
            return
        n = len(x)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                y = tuple(j if a == i else i if a == j else a for a in x)
                if inversions(x) < inversions(y) <= lv and leq(y, v):
                    dfs(y, labels + [(i, j)])

    dfs(u, [])
    return dict(out)


EX24_TABLE = {
    (1,): 1, (3,): 2, (1, 2): 2, (2, 1): 2, (1, 1, 1): 2, (5,): 1, (1, 4): 2, (2, 3): 4,
    (1, 1, 3): 3, (3, 2): 5, (1, 2, 2): 8, (2, 1, 2): 6, (1, 1, 1, 2): 3, (4, 1): 3,
    (1, 3, 1): 6, (2, 2, 1): 8, (1, 1, 2, 1): 5, (3, 1, 1): 3, (1, 2, 1, 1): 4,
    (2, 1, 1, 1): 2, (1, 1, 1, 1, 1): 1,
}


class TestGraph:
    def test_trivial(self, S3):
        assert bruhat_graph(S3, S3.identity, S3.identity) == []

    def test_s3_edge_count(self, S3):
        # 1 (e) + ... every pair x < y differing by a reflection
        oracle = sum(
            1
            for x in S3.elements
            for y in S3.elements
            if S3.length(x) < S3.length(y) and S3.as_reflection(S3.multiply(y, S3.inverse(x)))
        )
        assert len(bruhat_graph(S3, S3.identity, S3.longest)) == oracle == 9

    def test_incomparable(self, S4):
        with pytest.raises(IncomparableError):
            b_stats(S4, S4.parse("4231"), S4.parse("1234"))

    def test_make_path_validates(self, S3):
        p = make_path(S3, [S3.parse("123"), S3.parse("213"), S3.parse("231")])
        assert p.length == 2 and p.start == S3.identity
        with pytest.raises(ValueError):
            make_path(S3, [S3.parse("213"), S3.parse("321")])


class TestDescents:
    def test_hand_labelled(self, S3):
        p = make_path(S3, [S3.parse(x) for x in ("123", "213", "231", "321")])
        assert descent_composition(p, LEX) == (3,)
        q = make_path(S3, [S3.parse(x) for x in ("123", "132", "231", "321")])
        assert descent_composition(q, LEX) == (1, 2)

    def test_length_one(self, S3):
        p = make_path(S3, [S3.identity, S3.longest])
        assert descent_composition(p) == (1,)


class TestStats:
    def test_example_table(self, ex24):
        W, u, v = ex24
        s = b_stats(W, u, v)
        assert s.by_composition == EX24_TABLE
        assert s.total() == 73
        assert sum(1 for _ in iter_paths(W, u, v)) == 73

    def test_s3_top(self, S3):
        s = b_stats(S3, S3.identity, S3.longest)
        assert s.by_composition == {(3,): 1, (2, 1): 1, (1, 2): 1, (1, 1, 1): 1, (1,): 1}

    def test_trivial_is_empty(self, S3):
        assert not b_stats(S3, S3.identity, S3.identity)

    @pytest.mark.parametrize("ordering,rev", [(LEX, False), (REVLEX, True)])
    def test_against_dfs_oracle(self, S4, ordering, rev):
        for u, v in S4.comparable_pairs():
            assert b_stats(S4, u, v, ordering).by_composition == oracle_stats(S4, u, v, rev)

    def test_s5_samples_against_oracle(self, S5):
        pairs = S5.comparable_pairs()
        for u, v in pairs[::97]:
            assert b_stats(S5, u, v).by_composition == oracle_stats(S5, u, v)

    def test_parity(self, S4):
        for u, v in S4.comparable_pairs():
            l = S4.length(v) - S4.length(u)
            assert all((l - k) % 2 == 0 for k in b_stats(S4, u, v).totals())

    def test_ordering_independence_s5(self, S5):
        for u, v in S5.comparable_pairs()[::53]:
            assert b_stats(S5, u, v, LEX).counts == b_stats(S5, u, v, REVLEX).counts


class TestC:
    def test_examples(self, ex24, S3):
        W, u, v = ex24
        s = b_stats(W, u, v)
        assert c_from_b(s, (1, 1, 1, 1, 1)) == 64
        t = b_stats(S3, S3.identity, S3.longest)
        assert c_from_b(t, (3,)) == 1
        assert c_from_b(t, (1, 2)) == 2

    def test_chains(self, ex24, S3):
        W, u, v = ex24
        assert c_via_chains(W, u, v, (5,)) == 1
        assert c_via_chains(S3, S3.identity, S3.longest, (1, 2)) == 2
        s = b_stats(W, u, v)
        for n in range(1, 6):
            for S in range(1 << (n - 1)):
                alpha = mask_to_composition(S, n)
                assert c_via_chains(W, u, v, alpha) == c_from_b(s, alpha)

    def test_increasing_paths_count_rtilde(self, S4):
        for u, v in S4.comparable_pairs():
            rt = r_tilde(S4, u, v)
            for k in range(1, S4.length(v) - S4.length(u) + 1):
                assert len(increasing_paths(S4, u, v, k)) == rt[k]


class TestFlip:
    def test_hand_example(self, S3):
        u, v = S3.parse("123"), S3.parse("231")
        paths = length2_paths(S3, u, v)
        assert [tuple(S3.format(x) for x in p.vertices) for p in paths] == [
            ("123", "213", "231"),
            ("123", "132", "231"),
        ]
        a, b = paths
        assert flip2(S3, a) == b and flip2(S3, b) == a
        # label of the first step goes up, of the last step goes down
        assert LEX.key(a.labels[0]) < LEX.key(b.labels[0])
        assert LEX.key(b.labels[1]) < LEX.key(a.labels[1])

    def test_involution_s4(self, S4):
        for u, v in S4.comparable_pairs():
            if S4.length(v) - S4.length(u) == 2:
                for p in length2_paths(S4, u, v):
                    assert flip2(S4, flip2(S4, p)) == p

    def test_rejects_wrong_length(self, S3):
        p = make_path(S3, [S3.identity, S3.longest])
        with pytest.raises(ValueError):
            flip2(S3, p)

    def test_phi_identity_and_injective(self, ex24):
        W, u, v = ex24
        for k in (1, 3, 5):
            seen = set()
            for p in increasing_paths(W, u, v, k):
                assert phi_injection(W, p, ()) == p
                for r in range(k):
                    for S in combinations(range(1, k), r):
                        q = phi_injection(W, p, S)
                        assert q.start == u and q.end == v and q.length == k
                        seen.add(q.vertices)
            assert len(seen) == 2 ** (k - 1) * r_tilde(W, u, v)[k]

    def test_phi_precondition(self, S3):
        q = make_path(S3, [S3.parse(x) for x in ("123", "132", "231", "321")])
        with pytest.raises(ValueError):
            phi_injection(S3, q, ())

    def test_flip_at_keeps_endpoints(self, ex24):
        W, u, v = ex24
        p = increasing_paths(W, u, v, 5)[0]
        for i in range(1, 5):
            q = flip_at(W, p, i)
            assert q.vertices[0] == u and q.vertices[-1] == v
            assert q.vertices[:i] == p.vertices[:i]
