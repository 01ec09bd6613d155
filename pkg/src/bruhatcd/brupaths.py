"""
Bruhat graphs of intervals, path statistics ``b_alpha`` / ``c_alpha`` and
the flip maps on length-2 paths.

Path counts are tallied without materializing paths: a forward sweep over
``[u, v]`` in length order carries, per vertex, a counter keyed by
``(last label rank, path length, descent mask)``.  Descent masks use bit
``i-1`` for a descent at position ``i``.

>>> from bruhatcd.coxeter import CoxeterSystem
>>> W = CoxeterSystem.parse_name("S3")
>>> b_stats(W, W.identity, W.longest).by_composition[(1, 2)]
1
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .coxeter import LEX, CoxeterSystem, IncomparableError, Reflection, ReflectionOrdering
from .klcore import r_tilde
from .polyalg import (
    composition_to_mask,
    mask_to_composition,
    subset_to_composition,
)

__all__ = [
    "BruhatPath",
    "PathStats",
    "FlipError",
    "bruhat_graph",
    "make_path",
    "descent_set",
    "descent_composition",
    "forward_tallies",
    "backward_tallies",
    "b_stats",
    "c_from_b",
    "c_via_chains",
    "iter_paths",
    "increasing_paths",
    "length2_paths",
    "flip2",
    "flip_at",
    "phi_injection",
]


class FlipError(ValueError):
    pass


@dataclass(frozen=True)
class BruhatPath:
    vertices: tuple[tuple[int, ...], ...]
    labels: tuple[Reflection, ...]

    @property
    def length(self) -> int:
        return len(self.labels)

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]


def make_path(W: CoxeterSystem, vertices: Iterable[tuple[int, ...]]) -> BruhatPath:
    vs = tuple(vertices)
    labels = []
    for x, y in zip(vs, vs[1:]):
        t = W.edge_label(x, y)
        if t is None:
            raise ValueError(f"no Bruhat-graph edge {W.format(x)} -> {W.format(y)}")
        labels.append(t)
    return BruhatPath(vs, tuple(labels))


def bruhat_graph(W: CoxeterSystem, u, v) -> list[tuple[tuple, tuple, Reflection]]:
    """Edges ``(x, y, label)`` of the Bruhat graph restricted to ``[u, v]``."""
    return [(x, y, t) for x, outs in _interval_edges(W, u, v).items() for y, t in outs]


@lru_cache(maxsize=256)
def _interval_edges(W: CoxeterSystem, u, v) -> dict[tuple, list[tuple[tuple, Reflection]]]:
    els = W.interval(u, v)
    inside = set(els)
    return {x: [(y, t) for y, t in W.up_edges(x) if y in inside] for x in els}


def descent_set(labels: Iterable[Reflection], ordering: ReflectionOrdering = LEX) -> frozenset[int]:
    keys = [ordering.key(t) for t in labels]
    return frozenset(i + 1 for i in range(len(keys) - 1) if keys[i] > keys[i + 1])


def descent_composition(p: BruhatPath, ordering: ReflectionOrdering = LEX) -> tuple[int, ...]:
    return subset_to_composition(descent_set(p.labels, ordering), p.length)


@dataclass(frozen=True)
class PathStats:
    """Path counts of one interval keyed by ``(length, descent mask)``."""

    counts: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def by_composition(self) -> dict[tuple[int, ...], int]:
        return {mask_to_composition(m, k): c for (k, m), c in sorted(self.counts.items())}

    def totals(self) -> dict[int, int]:
        out: Counter = Counter()
        for (k, _), c in self.counts.items():
            out[k] += c
        return dict(sorted(out.items()))

    def total(self) -> int:
        return sum(self.counts.values())

    def b(self, alpha: tuple[int, ...]) -> int:
        return self.counts.get((sum(alpha), composition_to_mask(alpha)), 0)

    def b_set(self, S: Iterable[int], length: int) -> int:
        m = 0
        for s in S:
            m |= 1 << (s - 1)
        return self.counts.get((length, m), 0)

    def c(self, alpha: tuple[int, ...]) -> int:
        return c_from_b(self, alpha)

    def __bool__(self) -> bool:
        return bool(self.counts)


def _ranks(W: CoxeterSystem, ordering: ReflectionOrdering) -> dict[Reflection, int]:
    return ordering.ranks(W.reflections)


@lru_cache(maxsize=256)
def forward_tallies(W: CoxeterSystem, u, v, ordering: ReflectionOrdering = LEX) -> dict[tuple, PathStats]:
    """For every ``w`` in ``[u, v]``, the statistics of all paths from ``u`` to ``w``."""
    edges = _interval_edges(W, u, v)
    rank = _ranks(W, ordering)
    states: dict[tuple, dict[tuple[int, int, int], int]] = defaultdict(dict)
    states[u][(-1, 0, 0)] = 1
    for x in edges:  # length order is a topological order
        sx = states.get(x)
        if not sx:
            continue
        for y, t in edges[x]:
            r = rank[t]
            sy = states[y]
            for (last, k, m), c in sx.items():
                m2 = m | (1 << (k - 1)) if k and last > r else m
                key = (r, k + 1, m2)
                sy[key] = sy.get(key, 0) + c
    out = {}
    for x in edges:
        tally: dict[tuple[int, int], int] = {}
        for (_, k, m), c in states.get(x, {}).items():
            tally[(k, m)] = tally.get((k, m), 0) + c
        out[x] = PathStats(tally)
    return out


@lru_cache(maxsize=256)
def backward_tallies(W: CoxeterSystem, u, v, ordering: ReflectionOrdering = LEX) -> dict[tuple, PathStats]:
    """For every ``w`` in ``[u, v]``, the statistics of all paths from ``w`` to ``v``."""
    edges = _interval_edges(W, u, v)
    rank = _ranks(W, ordering)
    into: dict[tuple, list[tuple[tuple, int]]] = defaultdict(list)
    for x, outs in edges.items():
        for y, t in outs:
            into[y].append((x, rank[t]))
    states: dict[tuple, dict[tuple[int, int, int], int]] = defaultdict(dict)
    states[v][(-1, 0, 0)] = 1
    for y in reversed(list(edges)):
        sy = states.get(y)
        if not sy:
            continue
        for x, r in into[y]:
            sx = states[x]
            for (first, k, m), c in sy.items():
                m2 = (m << 1) | (r > first) if k else 0
                key = (r, k + 1, m2)
                sx[key] = sx.get(key, 0) + c
    out = {}
    for x in edges:
        tally: dict[tuple[int, int], int] = {}
        for (_, k, m), c in states.get(x, {}).items():
            tally[(k, m)] = tally.get((k, m), 0) + c
        out[x] = PathStats(tally)
    return out


def b_stats(W: CoxeterSystem, u, v, ordering: ReflectionOrdering = LEX) -> PathStats:
    """The ``b_alpha(u, v)`` of every composition, via the forward tally."""
    if not W.bruhat_leq(u, v):
        raise IncomparableError(f"{W.format(u)} is not below {W.format(v)}")
    if u == v:
        return PathStats({})
    stats = forward_tallies(W, u, v, ordering)[v]
    lv = W.length(v) - W.length(u)
    assert all(k <= lv and (lv - k) % 2 == 0 for k, _ in stats.counts)
    return stats


def c_from_b(stats: PathStats, alpha: tuple[int, ...]) -> int:
    """``c_alpha``: paths of length ``|alpha|`` whose descent set lies in ``set(alpha)``."""
    k = sum(alpha)
    allowed = composition_to_mask(alpha)
    return sum(c for (kk, m), c in stats.counts.items() if kk == k and m & ~allowed == 0)


def c_via_chains(W: CoxeterSystem, u, v, alpha: tuple[int, ...]) -> int:
    """
    Sum over chains ``u = u0 < ... < ur = v`` of the product of the
    coefficients ``[q^alpha_j] Rt_{u_{j-1}, u_j}``.
    """
    if not alpha:
        return 1 if u == v else 0
    els = W.interval(u, v)
    f = {u: 1}
    for a in alpha:
        g: dict[tuple, int] = {}
        for y, cy in f.items():
            ly = W.length(y)
            for x in els:
                if W.length(x) - ly >= a and W.bruhat_leq(y, x):
                    coef = r_tilde(W, y, x)[a]
                    if coef:
                        g[x] = g.get(x, 0) + cy * coef
        f = g
    return f.get(v, 0)


def iter_paths(W: CoxeterSystem, u, v, length: Optional[int] = None) -> Iterator[BruhatPath]:
    """Depth-first enumeration of Bruhat paths from ``u`` to ``v``."""
    edges = _interval_edges(W, u, v)
    lv = W.length(v)

    def rec(x, verts, labels):
        if x == v:
            if length is None or len(labels) == length:
                yield BruhatPath(tuple(verts), tuple(labels))
            return
        if length is not None and len(labels) >= length:
            return
        for y, t in edges[x]:
            if W.length(y) <= lv:
                verts.append(y)
                labels.append(t)
                yield from rec(y, verts, labels)
                verts.pop()
                labels.pop()

    yield from rec(u, [u], [])


def increasing_paths(W: CoxeterSystem, u, v, length: int, ordering: ReflectionOrdering = LEX) -> list[BruhatPath]:
    """Paths of the given length with empty descent set."""
    edges = _interval_edges(W, u, v)
    out = []

    def rec(x, verts, labels):
        if len(labels) == length:
            if x == v:
                out.append(BruhatPath(tuple(verts), tuple(labels)))
            return
        for y, t in edges[x]:
            if labels and ordering.key(labels[-1]) > ordering.key(t):
                continue
            verts.append(y)
            labels.append(t)
            rec(y, verts, labels)
            verts.pop()
            labels.pop()

    if W.bruhat_leq(u, v):
        rec(u, [u], [])
    return out


def length2_paths(W: CoxeterSystem, u, v, ordering: ReflectionOrdering = LEX) -> list[BruhatPath]:
    """``B_2(u, v)`` ordered lexicographically by label pair."""
    out = []
    for x, t1 in W.up_edges(u):
        t2 = W.edge_label(x, v)
        if t2 is not None:
            out.append(BruhatPath((u, x, v), (t1, t2)))
    out.sort(key=lambda p: (ordering.key(p.labels[0]), ordering.key(p.labels[1])))
    return out


@lru_cache(maxsize=None)
def _b2_split(W: CoxeterSystem, u, v, ordering: ReflectionOrdering) -> tuple[list[BruhatPath], list[BruhatPath]]:
    paths = length2_paths(W, u, v, ordering)
    inc = [q for q in paths if not descent_set(q.labels, ordering)]
    dec = [q for q in paths if descent_set(q.labels, ordering)]
    return inc, dec


def flip2(W: CoxeterSystem, p: BruhatPath, ordering: ReflectionOrdering = LEX) -> BruhatPath:
    """
    The path of equal lexicographic rank among the length-2 paths with the
    other descent set.
    """
    if p.length != 2:
        raise ValueError("flip2 needs a path of length 2")
    inc, dec = _b2_split(W, p.start, p.end, ordering)
    if len(inc) != len(dec):
        raise FlipError(
            f"uneven descent split {len(inc)}/{len(dec)} in B_2"
            f"({W.format(p.start)}, {W.format(p.end)})"
        )
    same, other = (dec, inc) if descent_set(p.labels, ordering) else (inc, dec)
    r = next(i for i, q in enumerate(same) if q.vertices == p.vertices)
    return other[r]


def flip_at(W: CoxeterSystem, p: BruhatPath, i: int, ordering: ReflectionOrdering = LEX) -> BruhatPath:
    """Replace vertex ``i`` (1 <= i < length) by flipping the two edges around it."""
    if not 1 <= i < p.length:
        raise ValueError(f"flip position {i} outside [1, {p.length - 1}]")
    sub = BruhatPath(p.vertices[i - 1:i + 2], p.labels[i - 1:i + 1])
    f = flip2(W, sub, ordering)
    verts = p.vertices[:i] + (f.vertices[1],) + p.vertices[i + 1:]
    labels = p.labels[:i - 1] + f.labels + p.labels[i + 1:]
    return BruhatPath(verts, labels)


def phi_injection(W: CoxeterSystem, p: BruhatPath, S: Iterable[int], ordering: ReflectionOrdering = LEX) -> BruhatPath:
    """Flip an increasing path at the positions of ``S`` in increasing order."""
    if descent_set(p.labels, ordering):
        raise ValueError("phi_injection needs a path with empty descent set")
    pts = sorted(set(S))
    if any(not 1 <= s < p.length for s in pts):
        raise ValueError(f"positions {pts} outside [1, {p.length - 1}]")
    for s in pts:
        p = flip_at(W, p, s, ordering)
    return p

