from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bruhatcd.coxeter import (
    LEX,
    REVLEX,
    CoxeterSystem,
    IncomparableError,
    Reflection,
    compare_reflections,
)


def inversions(w):
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def bruhat_oracle(n):
    """Bruhat order on S_n as the transitive closure of 'swap two values to
    gain length', computed by breadth-first search."""
    els = list(permutations(range(1, n + 1)))
    up = {}
    for x in els:
        nbrs = []
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                y = tuple(j if a == i else i if a == j else a for a in x)
                if inversions(y) > inversions(x):
                    nbrs.append(y)
        up[x] = nbrs
    above = {}
    for x in els:
        seen, stack = {x}, [x]
        while stack:
            for y in up[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        above[x] = seen
    return above


@pytest.fixture(scope="module")
def oracle4():
    return bruhat_oracle(4)


def perm(n):
    return st.permutations(list(range(1, n + 1))).map(tuple)


class TestNames:
    def test_parse_name(self):
        assert CoxeterSystem.parse_name("S4").degrees == (4,)
        assert CoxeterSystem.parse_name("S2xS3").degrees == (2, 3)
        assert CoxeterSystem.parse_name("S2xS3").name == "S2xS3"

    @pytest.mark.parametrize("bad", ["T4", "S", "S4x", "4", "S0"])
    def test_bad_names(self, bad):
        with pytest.raises(ValueError):
            CoxeterSystem.parse_name(bad)

    def test_window_text(self):
        W = CoxeterSystem.parse_name("S2xS3")
        x = W.parse("21|132")
        assert x == (2, 1, 1, 3, 2)
        assert W.format(x) == "21|132"
        assert W.factors(x) == [(2, 1), (1, 3, 2)]
        with pytest.raises(ValueError):
            W.parse("21")
        with pytest.raises(ValueError):
            W.parse("22|123")

    def test_large_windows_use_commas(self):
        W = CoxeterSystem.symmetric(10)
        x = W.longest
        assert W.parse(W.format(x)) == x
        assert "," in W.format(x)


class TestGroup:
    def test_sizes(self, S3, S4):
        assert len(S3.elements) == 6 and len(S4.elements) == 24
        assert S4.generators == (1, 2, 3)
        assert CoxeterSystem.parse_name("S2xS3").generators == (1, 3, 4)

    def test_length_and_descents(self, S4):
        x = S4.parse("4231")
        assert S4.length(x) == 5
        assert S4.right_descents(x) == {1, 3}
        assert S4.length(S4.longest) == 6

    @given(perm(5))
    def test_length_is_inversions(self, x):
        W = CoxeterSystem.symmetric(5)
        assert W.length(x) == inversions(x)

    @given(perm(5), perm(5), perm(5))
    def test_group_laws(self, x, y, z):
        W = CoxeterSystem.symmetric(5)
        assert W.multiply(W.multiply(x, y), z) == W.multiply(x, W.multiply(y, z))
        assert W.multiply(x, W.inverse(x)) == W.identity

    @given(perm(5), st.integers(1, 4))
    def test_generator_is_right_multiplication(self, x, p):
        W = CoxeterSystem.symmetric(5)
        s = W.times_generator(W.identity, p)
        assert W.times_generator(x, p) == W.multiply(x, s)

    def test_product_elements(self):
        W = CoxeterSystem.parse_name("S2xS3")
        assert len(W.elements) == 12
        assert W.length(W.longest) == 4


class TestReflections:
    def test_count_and_elements(self, S4):
        assert len(S4.reflections) == 6
        t = Reflection(0, 1, 3)
        assert S4.reflection_element(t) == (3, 2, 1, 4)
        assert S4.as_reflection((3, 2, 1, 4)) == t
        assert S4.as_reflection((2, 3, 1, 4)) is None

    def test_orderings(self):
        a, b = Reflection(0, 1, 2), Reflection(0, 1, 3)
        assert compare_reflections(a, b, LEX) == -1
        assert compare_reflections(a, b, REVLEX) == 1
        assert compare_reflections(a, a) == 0

    def test_edge_labels(self, S3):
        e, s1, w0 = S3.parse("123"), S3.parse("213"), S3.parse("321")
        assert S3.edge_label(e, s1) == Reflection(0, 1, 2)
        assert S3.edge_label(e, w0) == Reflection(0, 1, 3)
        # 321 (213)^{-1} is a 3-cycle
        assert S3.edge_label(s1, w0) is None
        assert S3.edge_label(w0, e) is None

    @given(perm(4))
    def test_up_edges_are_labelled_edges(self, x):
        W = CoxeterSystem.symmetric(4)
        for y, t in W.up_edges(x):
            assert W.edge_label(x, y) == t
            assert W.multiply(W.reflection_element(t), x) == y


class TestBruhat:
    def test_against_oracle(self, S4, oracle4):
        for x in S4.elements:
            for y in S4.elements:
                assert S4.bruhat_leq(x, y) == (y in oracle4[x])

    def test_interval_size(self, S4):
        assert len(S4.interval(S4.parse("1234"), S4.parse("4231"))) == 20
        assert len(S4.interval(S4.identity, S4.longest)) == 24

    def test_interval_order(self, S4):
        iv = S4.interval(S4.identity, S4.parse("4231"))
        keys = [(S4.length(x), x) for x in iv]
        assert keys == sorted(keys)

    def test_incomparable(self, S4):
        with pytest.raises(IncomparableError):
            S4.interval(S4.parse("4231"), S4.parse("1234"))
        with pytest.raises(IncomparableError):
            S4.interval(S4.parse("2314"), S4.parse("3124"))

    def test_comparable_pair_counts(self, S3, S4, oracle4):
        assert len(S3.comparable_pairs()) == sum(len(v) - 1 for v in bruhat_oracle(3).values())
        assert len(S4.comparable_pairs()) == sum(len(v) - 1 for v in oracle4.values())
        assert len(S4.comparable_pairs(strict=False)) == len(S4.comparable_pairs()) + 24

    def test_products_are_componentwise(self):
        W = CoxeterSystem.parse_name("S2xS3")
        A, B = CoxeterSystem.symmetric(2), CoxeterSystem.symmetric(3)
        for x in W.elements:
            for y in W.elements:
                (x1, x2), (y1, y2) = W.factors(x), W.factors(y)
                assert W.bruhat_leq(x, y) == (A.bruhat_leq(x1, y1) and B.bruhat_leq(x2, y2))
