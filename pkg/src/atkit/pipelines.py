"""Two-sweep orderings for claw-free and bad-claw-free AT-free graphs.

The sweeps themselves are linear time. Claw, bad-claw and asteroidal-triple
certification is polynomial and only runs when ``certify`` is requested.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .convexity import BetweennessOracle, find_asteroidal_triple
from .errors import AtkitError, BadClawPresent, NotClawFree, NotDominatingPair
from .graph import Graph, Vertex, distances_from, require_connected
from .searches import Ordering, bfs, lbfs
from .verifiers import is_dominating_pair


class AsteroidalTriplePresent(AtkitError):
    def __init__(self, triple):
        self.triple = triple
        super().__init__(f"graph has an asteroidal triple: {' '.join(map(str, triple))}")


@dataclass(frozen=True)
class ClawWitness:
    base: Vertex
    prongs: tuple
    bad: bool = False

    def __str__(self):
        kind = "bad claw" if self.bad else "claw"
        return f"{kind} base {self.base} prongs {' '.join(map(str, self.prongs))}"


def iter_claws(g: Graph) -> Iterator[tuple]:
    """Index claws (base, a, b, c), a < b < c, by ascending base then prongs."""
    for c in range(g.n):
        nbrs = g.neighbour_indices(c)
        if len(nbrs) < 3:
            continue
        for a, b, d in itertools.combinations(nbrs, 3):
            if not (g.adj[a] >> b & 1 or g.adj[a] >> d & 1 or g.adj[b] >> d & 1):
                yield c, a, b, d


def find_claw(g: Graph) -> ClawWitness | None:
    for c, a, b, d in iter_claws(g):
        return ClawWitness(g.names[c], (g.names[a], g.names[b], g.names[d]))
    return None


def iter_bad_claws(g: Graph, o: BetweennessOracle | None = None) -> Iterator[ClawWitness]:
    """Every bad claw; prongs are listed (a, z, b) with z the middle one."""
    o = o or BetweennessOracle(g)
    names = g.names
    for c, p, q, r in iter_claws(g):
        for a, z, b in ((q, p, r), (p, q, r), (p, r, q)):
            if o.between_idx(a, z, b):
                yield ClawWitness(names[c], (names[a], names[z], names[b]), bad=True)


def find_bad_claw(g: Graph, o: BetweennessOracle | None = None) -> ClawWitness | None:
    return next(iter_bad_claws(g, o), None)


@dataclass(frozen=True)
class SweepResult:
    first: Ordering
    ordering: Ordering


def clawfree_atfree_order(g: Graph, o: BetweennessOracle | None = None, *,
                          certify: bool = False, check_claws: bool = True) -> SweepResult:
    """BFS from the canonical-first vertex, then BFS again from where it ended."""
    require_connected(g)
    if check_claws:
        claw = find_claw(g)
        if claw is not None:
            raise NotClawFree(claw)
    if certify:
        triple = find_asteroidal_triple(g, o)
        if triple is not None:
            raise AsteroidalTriplePresent(triple)
    first = bfs(g, g.names[0])
    return SweepResult(first, bfs(g, first.sequence[-1]))


def badclawfree_atfree_order(g: Graph, o: BetweennessOracle | None = None, *,
                             certify: bool = False) -> SweepResult:
    """LBFS from the canonical-first vertex, then LBFS again from its end vertex."""
    require_connected(g)
    if certify:
        o = o or BetweennessOracle(g)
        bad = find_bad_claw(g, o)
        if bad is not None:
            raise BadClawPresent(bad)
        triple = find_asteroidal_triple(g, o)
        if triple is not None:
            raise AsteroidalTriplePresent(triple)
    first = lbfs(g, g.names[0])
    return SweepResult(first, lbfs(g, first.sequence[-1]))


def layers_clique_violation(g: Graph, s: Vertex) -> tuple | None:
    """Least non-adjacent pair sharing a distance layer other than layer 1."""
    dist = distances_from(g, g.idx(s))
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if dist[u] == dist[v] != 1 and dist[u] >= 0 and not g.adj[u] >> v & 1:
                return g.names[u], g.names[v]
    return None


def layers_are_cliques(g: Graph, s: Vertex) -> bool:
    return layers_clique_violation(g, s) is None


def lemma3_violation(g: Graph, s: Vertex, t: Vertex) -> tuple | None:
    """Least non-adjacent (u, v) closer to s than v yet strictly closer to t too.

    Requires (s, t) to be a dominating pair.
    """
    if not is_dominating_pair(g, s, t):
        raise NotDominatingPair(s, t)
    ds = distances_from(g, g.idx(s))
    dt = distances_from(g, g.idx(t))
    for u in range(g.n):
        for v in range(g.n):
            if u == v or g.adj[u] >> v & 1:
                continue
            if ds[u] < ds[v] and dt[u] < dt[v]:
                return g.names[u], g.names[v]
    return None


def lemma3_check(g: Graph, s: Vertex, t: Vertex) -> bool:
    """Distance monotonicity: farther from s never means farther from t for non-neighbours."""
    return lemma3_violation(g, s, t) is None
