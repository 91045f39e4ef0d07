"""Graph searches: BFS, BFS+, LBFS, LBFS+ and the convexity-guided BFS.

Unless a prior ordering is supplied, ties are broken by canonical index.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .convexity import BetweennessOracle, is_admissible, middle_witness
from .errors import ConvexChoiceUnavailable, NotAdmissible, PermutationMismatch
from .graph import Graph, Vertex, bits, popcount, require_connected

TAGS = (
    "bfs", "bfs_plus", "lbfs", "lbfs_plus", "bfs_conv", "bfs_conv_minhull",
    "bfs_conv_augmented", "external",
)


@dataclass(frozen=True)
class Ordering:
    sequence: tuple
    produced_by: str = "external"
    start: Vertex = None
    position_of: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "sequence", tuple(self.sequence))
        if self.start is None and self.sequence:
            object.__setattr__(self, "start", self.sequence[0])
        object.__setattr__(self, "position_of", {v: i + 1 for i, v in enumerate(self.sequence)})

    def __len__(self):
        return len(self.sequence)

    def __iter__(self):
        return iter(self.sequence)

    def __getitem__(self, i):
        return self.sequence[i]

    def reversed(self) -> "Ordering":
        return Ordering(self.sequence[::-1], "external")

    def precedes(self, u, v) -> bool:
        return self.position_of[u] < self.position_of[v]


def as_ordering(g: Graph, tau) -> Ordering:
    """Coerce a vertex sequence into an Ordering, checking it is a permutation of V."""
    if not isinstance(tau, Ordering):
        tau = Ordering(tuple(tau))
    seq = tau.sequence
    if len(seq) != g.n or set(seq) != set(g.names):
        extra = [v for v in seq if v not in g.index]
        missing = [v for v in g.names if v not in tau.position_of]
        raise PermutationMismatch(
            f"not a permutation of the vertex set (unknown: {extra}, missing: {missing})"
        )
    if len(set(seq)) != len(seq):
        raise PermutationMismatch("ordering repeats a vertex")
    return tau


def order_indices(g: Graph, tau: Ordering) -> list:
    return [g.index[v] for v in tau.sequence]


def _finish(g, idx_seq, tag, start) -> Ordering:
    return Ordering(tuple(g.names[i] for i in idx_seq), tag, start)


def _bfs(g: Graph, start: int, sorted_nbrs) -> list:
    seen = 1 << start
    out = []
    queue = deque([start])
    while queue:
        v = queue.popleft()
        out.append(v)
        for w in sorted_nbrs[v]:
            if not seen >> w & 1:
                seen |= 1 << w
                queue.append(w)
    return out


def bfs(g: Graph, s: Vertex) -> Ordering:
    si = g.idx(s)
    require_connected(g)
    return _finish(g, _bfs(g, si, [g.neighbour_indices(i) for i in range(g.n)]), "bfs", s)


def bfs_plus(g: Graph, tau) -> Ordering:
    """BFS from the last vertex of ``tau``, queueing neighbours latest-in-``tau`` first."""
    tau = as_ordering(g, tau)
    require_connected(g)
    pos = [tau.position_of[v] for v in g.names]
    nbrs = [sorted(g.neighbour_indices(i), key=lambda j: -pos[j]) for i in range(g.n)]
    start = g.index[tau.sequence[-1]]
    return _finish(g, _bfs(g, start, nbrs), "bfs_plus", tau.sequence[-1])


class _Slice:
    __slots__ = ("members", "prev", "next", "split")

    def __init__(self, members):
        self.members = members
        self.prev = None
        self.next = None
        self.split = None


def _lbfs(g: Graph, start: int, rank: Sequence[int]) -> list:
    """LBFS by partition refinement; tied vertices leave in ascending ``rank``.

    Slices are insertion-ordered dicts in a linked list. Neighbours are moved
    in rank order, so every slice stays sorted by rank and splits are stable.
    """
    n = g.n
    nbrs = [sorted(g.neighbour_indices(i), key=rank.__getitem__) for i in range(n)]
    head = _Slice({start: None})
    others = {i: None for i in sorted(range(n), key=rank.__getitem__) if i != start}
    slice_of = [head] * n
    if others:
        rest = _Slice(others)
        head.next, rest.prev = rest, head
        for i in others:
            slice_of[i] = rest
    numbered = [False] * n
    out = []
    while head is not None:
        v = next(iter(head.members))
        del head.members[v]
        if not head.members:
            head = head.next
            if head is not None:
                head.prev = None
        numbered[v] = True
        out.append(v)
        touched = []
        for w in nbrs[v]:
            if numbered[w]:
                continue
            old = slice_of[w]
            new = old.split
            if new is None:
                new = _Slice({})
                new.prev, new.next = old.prev, old
                if old.prev is not None:
                    old.prev.next = new
                else:
                    head = new
                old.prev = new
                old.split = new
                touched.append(old)
            del old.members[w]
            new.members[w] = None
            slice_of[w] = new
        for old in touched:
            old.split = None
            if not old.members:
                # old.prev is its freshly inserted split, never None here
                old.prev.next = old.next
                if old.next is not None:
                    old.next.prev = old.prev
    return out


def lbfs(g: Graph, s: Vertex) -> Ordering:
    si = g.idx(s)
    require_connected(g)
    return _finish(g, _lbfs(g, si, list(range(g.n))), "lbfs", s)


def lbfs_plus(g: Graph, tau) -> Ordering:
    """LBFS from the last vertex of ``tau``; tied vertices go latest-in-``tau`` first."""
    tau = as_ordering(g, tau)
    require_connected(g)
    rank = [-tau.position_of[v] for v in g.names]
    start = g.index[tau.sequence[-1]]
    return _finish(g, _lbfs(g, start, rank), "lbfs_plus", tau.sequence[-1])


@dataclass
class TraceStep:
    step: int
    chosen: Vertex
    eligible: tuple
    # (candidate, u, z): z lies in I(u, candidate) and is still unvisited
    rejected: tuple = ()
    hull_sizes: tuple = ()


@dataclass
class SearchTrace:
    steps: list = field(default_factory=list)
    failure: ConvexChoiceUnavailable | None = None

    @property
    def flagged(self) -> bool:
        return self.failure is not None


def _violating_pair(o: BetweennessOracle, visited: int, v: int):
    """Least (u, z) with u visited, z unvisited and z in I(u, v)."""
    row = o.interval_mask[v]
    for u in bits(visited):
        outside = row[u] & ~visited
        if outside:
            return u, (outside & -outside).bit_length() - 1
    return None


def _conv_search(g: Graph, s: Vertex, o: BetweennessOracle | None, strict: bool,
                 minhull: bool, tag: str):
    si = g.idx(s)
    require_connected(g)
    if o is None:
        o = BetweennessOracle(g)
    names = g.names
    parent = [-1] * g.n
    queue: list = [si]
    queued = 1 << si
    visited = 0
    out = []
    trace = SearchTrace()
    for step in range(1, g.n + 1):
        # BFS-eligible: the leading run of the queue that shares one parent
        front = queue[0]
        eligible = [w for w in queue if parent[w] == parent[front]]
        rejected = []
        sizes = ()
        chosen = None
        if trace.failure is not None:
            chosen = front
        elif minhull:
            sizes = tuple(popcount(o.hull_mask(visited | 1 << w)) for w in eligible)
            best = min(sizes)
            chosen = min(w for w, h in zip(eligible, sizes) if h == best)
        else:
            for w in eligible:
                bad = _violating_pair(o, visited, w)
                if bad is None:
                    chosen = w
                    break
                rejected.append((names[w], names[bad[0]], names[bad[1]]))
            if chosen is None:
                failure = ConvexChoiceUnavailable(step, [names[w] for w in queue], trace)
                if strict:
                    raise failure
                trace.failure = failure
                chosen = front
        trace.steps.append(TraceStep(
            step, names[chosen], tuple(names[w] for w in eligible), tuple(rejected), sizes,
        ))
        queue.remove(chosen)
        visited |= 1 << chosen
        out.append(chosen)
        for w in g.neighbour_indices(chosen):
            if not queued >> w & 1:
                queued |= 1 << w
                parent[w] = chosen
                queue.append(w)
    return _finish(g, out, tag, s), trace


def bfs_conv(g: Graph, s: Vertex, o: BetweennessOracle | None = None, strict: bool = True):
    """BFS that only visits a vertex if the visited set stays convex.

    Returns ``(ordering, trace)``. When no eligible vertex qualifies the graph
    has an asteroidal triple: with ``strict`` ConvexChoiceUnavailable is raised,
    otherwise the search records the failure and finishes as a plain BFS.
    """
    return _conv_search(g, s, o, strict, minhull=False, tag="bfs_conv")


def bfs_conv_minhull(g: Graph, s: Vertex, o: BetweennessOracle | None = None):
    """BFS choosing, among eligible vertices, one whose addition has the smallest hull."""
    return _conv_search(g, s, o, strict=False, minhull=True, tag="bfs_conv_minhull")


def _fresh_names(g: Graph, k: int) -> list:
    out = []
    for i in range(1, k + 1):
        name = f"v{i}"
        while name in g.index or name in out:
            name += "_"
        out.append(name)
    return out


@dataclass(frozen=True)
class AugmentedRun:
    graph: Graph
    pendant: tuple
    run: Ordering
    trace: SearchTrace
    ordering: Ordering


def augmented_run(g: Graph, s: Vertex, o: BetweennessOracle | None = None) -> AugmentedRun:
    """Hang a three-vertex path off ``s`` and run the convex BFS from its far end."""
    g.idx(s)
    require_connected(g)
    if o is None:
        o = BetweennessOracle(g)
    if not is_admissible(o, s):
        raise NotAdmissible(s, middle_witness(o, s))
    v1, v2, v3 = _fresh_names(g, 3)
    gp = Graph(list(g.names) + [v1, v2, v3], list(g.edges) + [(v1, v2), (v2, v3), (v3, s)])
    run, trace = bfs_conv(gp, v1)
    stripped = Ordering(run.sequence[3:], "bfs_conv_augmented", s)
    return AugmentedRun(gp, (v1, v2, v3), run, trace, stripped)


def bfs_conv_augmented(g: Graph, s: Vertex, o: BetweennessOracle | None = None) -> Ordering:
    return augmented_run(g, s, o).ordering
