"""Immutable simple undirected graphs and the distance/component primitives.

Vertices carry opaque names; each gets a canonical index 0..n-1 in the order
it was introduced. Every deterministic tie-break in the package refers to that
index. Vertex sets are handled internally as int bitmasks over the indices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Sequence

from .errors import DisconnectedGraph, DuplicateEdge, InvalidVertex, SelfLoop

Vertex = Hashable

REMOVED = None


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """A simple undirected graph with named vertices.

    ``edges`` keeps the input order so a serialised graph re-reads with the
    same canonical indices.
    """

    __slots__ = ("names", "index", "edges", "adj", "_nbr_idx")

    def __init__(self, vertices: Iterable[Vertex] = (), edges: Iterable[tuple] = ()):
        names: list = []
        index: dict = {}

        def intro(v):
            if v not in index:
                index[v] = len(names)
                names.append(v)
            return index[v]

        for v in vertices:
            intro(v)
        adj: list[int] = [0] * len(names)
        kept = []
        seen = set()
        for u, v in edges:
            if u == v:
                raise SelfLoop(None, f"self-loop at {u!r}")
            iu, iv = intro(u), intro(v)
            while len(adj) < len(names):
                adj.append(0)
            key = (min(iu, iv), max(iu, iv))
            if key in seen:
                raise DuplicateEdge(None, f"duplicate edge {u!r} {v!r}")
            seen.add(key)
            adj[iu] |= 1 << iv
            adj[iv] |= 1 << iu
            kept.append((u, v))
        self.names: tuple = tuple(names)
        self.index: dict = index
        self.edges: tuple = tuple(kept)
        self.adj: tuple = tuple(adj)
        self._nbr_idx: tuple = tuple(tuple(bits(a)) for a in adj)

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __len__(self):
        return self.n

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, v):
        return v in self.index

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.names == other.names and self.adj == other.adj

    def __hash__(self):
        return hash((self.names, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def idx(self, v: Vertex) -> int:
        try:
            return self.index[v]
        except (KeyError, TypeError):
            raise InvalidVertex(v) from None

    def neighbour_indices(self, i: int) -> tuple:
        """Neighbours of index ``i`` in ascending canonical order."""
        return self._nbr_idx[i]

    def neighbours(self, v: Vertex) -> frozenset:
        return frozenset(self.names[j] for j in self._nbr_idx[self.idx(v)])

    def closed_mask(self, i: int) -> int:
        return self.adj[i] | (1 << i)

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return bool(self.adj[self.idx(u)] >> self.idx(v) & 1)

    def degree(self, v: Vertex) -> int:
        return len(self._nbr_idx[self.idx(v)])

    def mask_of(self, vertices: Iterable[Vertex]) -> int:
        mask = 0
        for v in vertices:
            mask |= 1 << self.idx(v)
        return mask

    def names_of(self, mask: int) -> list:
        return [self.names[i] for i in bits(mask)]

    def induced_subgraph(self, vertices: Iterable[Vertex]) -> "Graph":
        """Induced subgraph; vertices keep their relative canonical order."""
        keep = self.mask_of(vertices)
        names = self.names_of(keep)
        edges = [
            (u, v)
            for u, v in self.edges
            if keep >> self.index[u] & 1 and keep >> self.index[v] & 1
        ]
        return Graph(names, edges)

    def subgraph_mask(self, keep: int) -> "Graph":
        return self.induced_subgraph(self.names_of(keep))


def reach_mask(g: Graph, start: int, allowed: int) -> int:
    """Indices reachable from ``start`` inside ``allowed`` (start must be allowed)."""
    seen = 1 << start
    frontier = seen
    adj = g.adj
    while frontier:
        nxt = 0
        for i in bits(frontier):
            nxt |= adj[i]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def component_labels(g: Graph, allowed: int) -> list:
    """Component id per index inside the ``allowed`` vertex set, -1 elsewhere.

    Ids are numbered by the least canonical index in each component.
    """
    labels = [-1] * g.n
    rest = allowed
    cid = 0
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = reach_mask(g, start, allowed)
        for i in bits(comp):
            labels[i] = cid
        rest &= ~comp
        cid += 1
    return labels


def components(g: Graph, allowed: int | None = None) -> list:
    """Component masks of the subgraph induced by ``allowed``."""
    rest = g.full_mask if allowed is None else allowed
    out = []
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = reach_mask(g, start, rest)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return g.n == 0 or reach_mask(g, 0, g.full_mask) == g.full_mask


def require_connected(g: Graph) -> None:
    if g.n == 0:
        return
    seen = reach_mask(g, 0, g.full_mask)
    if seen != g.full_mask:
        raise DisconnectedGraph(g.names_of(g.full_mask & ~seen))


def distances_from(g: Graph, source: int, allowed: int | None = None) -> list:
    """Hop distances from index ``source``; -1 marks unreachable indices."""
    if allowed is None:
        allowed = g.full_mask
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbour_indices(u):
            if dist[w] < 0 and allowed >> w & 1:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def components_avoiding(g: Graph, z: Vertex) -> dict:
    """Map each vertex to its component id in G - N[z]; N[z] maps to REMOVED."""
    zi = g.idx(z)
    labels = component_labels(g, g.full_mask & ~g.closed_mask(zi))
    return {g.names[i]: (REMOVED if c < 0 else c) for i, c in enumerate(labels)}


@dataclass(frozen=True)
class LayerDecomposition:
    source: Vertex
    layers: tuple
    layer_of: dict

    @property
    def eccentricity(self) -> int:
        return len(self.layers) - 1

    def neighbours_in_layer(self, g: Graph, v: Vertex, k: int) -> frozenset:
        """Neighbours of ``v`` sitting in layer ``k``."""
        if not 0 <= k < len(self.layers):
            return frozenset()
        return g.neighbours(v) & frozenset(self.layers[k])

    def eccentric_vertices(self) -> tuple:
        return self.layers[-1]


def bfs_layers(g: Graph, s: Vertex) -> LayerDecomposition:
    si = g.idx(s)
    dist = distances_from(g, si)
    missing = [g.names[i] for i, d in enumerate(dist) if d < 0]
    if missing:
        raise DisconnectedGraph(missing)
    layers: list = [[] for _ in range(max(dist) + 1)]
    for i, d in enumerate(dist):
        layers[d].append(g.names[i])
    return LayerDecomposition(
        source=s,
        layers=tuple(tuple(layer) for layer in layers),
        layer_of={g.names[i]: d for i, d in enumerate(dist)},
    )


@dataclass(frozen=True)
class Path:
    vertices: tuple
    chordless: bool = False

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


def is_chordless(g: Graph, seq: Sequence[Vertex]) -> bool:
    idx = [g.idx(v) for v in seq]
    for a in range(len(idx)):
        for b in range(a + 2, len(idx)):
            if g.adj[idx[a]] >> idx[b] & 1:
                return False
    return True


def shortest_path_within(g: Graph, u: int, w: int, allowed: int) -> list | None:
    """Lexicographically least shortest u-w index path inside ``allowed``."""
    if not (allowed >> u & 1 and allowed >> w & 1):
        return None
    dist = distances_from(g, w, allowed)
    if dist[u] < 0:
        return None
    path = [u]
    cur = u
    while cur != w:
        cur = next(
            x for x in g.neighbour_indices(cur)
            if allowed >> x & 1 and dist[x] == dist[cur] - 1
        )
        path.append(cur)
    return path


def path_avoiding(g: Graph, u: Vertex, w: Vertex, z: Vertex) -> Path | None:
    """A chordless u-w path none of whose vertices lies in N[z], or None."""
    ui, wi, zi = g.idx(u), g.idx(w), g.idx(z)
    if len({ui, wi, zi}) < 3:
        raise ValueError("u, w and z must be distinct")
    allowed = g.full_mask & ~g.closed_mask(zi)
    found = shortest_path_within(g, ui, wi, allowed)
    if found is None:
        return None
    return Path(tuple(g.names[i] for i in found), chordless=True)
