"""Domination betweenness, its intervals and the convexity it induces.

A triple (x, y, z) is *between* when x and y share a component of G - N[z]
and y and z share a component of G - N[x]. Any avoiding path can be shortened
to a chordless one, so component co-membership decides the relation exactly.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidTriple
from .graph import Graph, Vertex, bits, component_labels, popcount

DEFAULT_EXHAUSTIVE_CAP = 8


class BetweennessOracle:
    """Per-vertex component structure of G - N[z] with O(1) betweenness lookups.

    ``comp[z][v]`` is the component id of ``v`` in G - N[z] (-1 inside N[z]).
    ``interval_mask[x][z]`` is the bitmask of I_D(x, z).
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        n = graph.n
        full = graph.full_mask
        self.comp = tuple(
            tuple(component_labels(graph, full & ~graph.closed_mask(z))) for z in range(n)
        )
        comp = self.comp
        # y is between x and z iff comp[z][x] == comp[z][y] and comp[x][y] == comp[x][z]
        intervals = [[0] * n for _ in range(n)]
        for x in range(n):
            cx = comp[x]
            for z in range(x + 1, n):
                if cx[z] < 0:
                    continue
                cz = comp[z]
                k = cz[x]
                m = 0
                for y in range(n):
                    if cz[y] == k and cx[y] == cx[z] and y != x and y != z:
                        m |= 1 << y
                intervals[x][z] = intervals[z][x] = m
        self.interval_mask = tuple(tuple(row) for row in intervals)
        # y is the middle of some triple
        middle = 0
        for row in intervals:
            for m in row:
                middle |= m
        self.middle_mask = middle
        self._hull_cache: dict = {}

    def between_idx(self, x: int, y: int, z: int) -> bool:
        return bool(self.interval_mask[x][z] >> y & 1)

    def is_between(self, x: Vertex, y: Vertex, z: Vertex) -> bool:
        g = self.graph
        xi, yi, zi = g.idx(x), g.idx(y), g.idx(z)
        if len({xi, yi, zi}) < 3:
            raise InvalidTriple(f"vertices must be distinct: {x!r} {y!r} {z!r}")
        return self.between_idx(xi, yi, zi)

    def interval(self, x: Vertex, z: Vertex) -> frozenset:
        g = self.graph
        xi, zi = g.idx(x), g.idx(z)
        if xi == zi:
            raise InvalidTriple("interval endpoints must differ")
        return frozenset(g.names_of(self.interval_mask[xi][zi]))

    def triples(self) -> Iterable[tuple]:
        """All index triples (x, y, z) of the relation, x < z, in lexicographic order."""
        n = self.graph.n
        for x in range(n):
            row = self.interval_mask[x]
            for z in range(x + 1, n):
                for y in bits(row[z]):
                    yield x, y, z

    def hull_mask(self, mask: int) -> int:
        """Least convex superset of ``mask`` (memoised)."""
        cached = self._hull_cache.get(mask)
        if cached is not None:
            return cached
        intervals = self.interval_mask
        hull = mask
        fresh = mask
        while fresh:
            # new pairs are those with at least one fresh member
            added = 0
            for a in bits(fresh):
                row = intervals[a]
                for c in bits(hull):
                    added |= row[c]
            fresh = added & ~hull
            hull |= fresh
        self._hull_cache[mask] = hull
        return hull

    def is_convex_mask(self, mask: int) -> bool:
        intervals = self.interval_mask
        for a in bits(mask):
            row = intervals[a]
            for c in bits(mask):
                if row[c] & ~mask:
                    return False
        return True


def build_oracle(g: Graph) -> BetweennessOracle:
    return BetweennessOracle(g)


def is_between(o: BetweennessOracle, x, y, z) -> bool:
    return o.is_between(x, y, z)


def interval(o: BetweennessOracle, x, z) -> frozenset:
    return o.interval(x, z)


@dataclass(frozen=True)
class ConvexSet:
    members: frozenset
    certified: bool = False


def convex_hull(o: BetweennessOracle, X: Iterable[Vertex]) -> ConvexSet:
    g = o.graph
    return ConvexSet(frozenset(g.names_of(o.hull_mask(g.mask_of(X)))), certified=True)


def is_convex(o: BetweennessOracle, X: Iterable[Vertex]) -> bool:
    return o.is_convex_mask(o.graph.mask_of(X))


def is_halfspace(o: BetweennessOracle, X: Iterable[Vertex]) -> bool:
    mask = o.graph.mask_of(X)
    return o.is_convex_mask(mask) and o.is_convex_mask(o.graph.full_mask & ~mask)


def admissible_vertices(o: BetweennessOracle) -> frozenset:
    g = o.graph
    return frozenset(g.names_of(g.full_mask & ~o.middle_mask))


def is_admissible(o: BetweennessOracle, v: Vertex) -> bool:
    return not o.middle_mask >> o.graph.idx(v) & 1


def middle_witness(o: BetweennessOracle, y: Vertex) -> tuple | None:
    """Least (x, y, z) with y in the middle, or None when y is admissible."""
    g = o.graph
    yi = g.idx(y)
    for x, mid, z in o.triples():
        if mid == yi:
            return g.names[x], y, g.names[z]
    return None


def find_asteroidal_triple(g: Graph, o: BetweennessOracle | None = None) -> tuple | None:
    """Least independent triple whose every pair avoids the third, or None."""
    comp = (o or BetweennessOracle(g)).comp
    n = g.n
    for a in range(n):
        ca = comp[a]
        for b in range(a + 1, n):
            if ca[b] < 0:
                continue
            cb = comp[b]
            for c in range(b + 1, n):
                if ca[c] < 0 or cb[c] < 0:
                    continue
                if ca[b] == ca[c] and cb[a] == cb[c] and comp[c][a] == comp[c][b]:
                    return g.names[a], g.names[b], g.names[c]
    return None


def transitivity_violation(o: BetweennessOracle) -> tuple | None:
    """Least (w, x, y, z) with (w,x,y) and (x,y,z) related but not (w,x,z).

    z may equal w: an asteroidal triple (a, b, c) relates (a,b,c) and (b,c,a),
    and the demanded (a,b,a) can never be in a strict betweenness.
    """
    g = o.graph
    n = g.n
    iv = o.interval_mask
    for w in range(n):
        for x in range(n):
            for y in range(n):
                if not iv[w][y] >> x & 1:
                    continue
                for z in range(n):
                    if iv[x][z] >> y & 1 and not iv[w][z] >> x & 1:
                        return tuple(g.names[i] for i in (w, x, y, z))
    return None


def is_transitive_betweenness(o: BetweennessOracle) -> bool:
    return transitivity_violation(o) is None


def _subset_sample(n: int, samples: int, seed: int) -> list:
    rng = random.Random(seed)
    return [rng.getrandbits(n) for _ in range(samples)]


def anti_exchange_violation(
    o: BetweennessOracle,
    max_n: int = DEFAULT_EXHAUSTIVE_CAP,
    samples: int = 4096,
    seed: int = 0,
) -> tuple | None:
    """Least (X, p, q) with X convex, q in conv(X+p) and p in conv(X+q).

    Exhaustive over all subsets when n <= ``max_n``; otherwise the hulls of a
    seeded sample of subsets serve as the convex sets X.
    """
    g = o.graph
    n = g.n
    if n <= max_n:
        candidates = (m for m in range(1 << n) if o.is_convex_mask(m))
    else:
        candidates = sorted({o.hull_mask(m) for m in _subset_sample(n, samples, seed)})
    for X in candidates:
        outside = list(bits(g.full_mask & ~X))
        for p, q in itertools.combinations(outside, 2):
            if o.hull_mask(X | 1 << p) >> q & 1 and o.hull_mask(X | 1 << q) >> p & 1:
                return frozenset(g.names_of(X)), g.names[p], g.names[q]
    return None


def anti_exchange_holds(o: BetweennessOracle, max_n: int = DEFAULT_EXHAUSTIVE_CAP, **kw) -> bool:
    return anti_exchange_violation(o, max_n, **kw) is None


def hull_size_after(o: BetweennessOracle, mask: int, v: int) -> int:
    return popcount(o.hull_mask(mask | 1 << v))
