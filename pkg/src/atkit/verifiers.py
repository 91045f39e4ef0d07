"""Ground-truth predicates on orderings and dominating pairs, and brute-force oracles.

Predicates come in pairs: ``is_*`` answers yes/no and ``*_violation``
returns the least witness (or None when the property holds).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Any

from .convexity import BetweennessOracle
from .errors import TooLarge
from .graph import Graph, Path, Vertex, bits, reach_mask, shortest_path_within
from .searches import Ordering, as_ordering, order_indices

DEFAULT_BRUTE_CAP = 9


def brute_cap() -> int:
    return int(os.environ.get("ATKIT_BRUTE_CAP", DEFAULT_BRUTE_CAP))


def _check_cap(g: Graph, cap: int | None) -> None:
    cap = brute_cap() if cap is None else cap
    if g.n > cap:
        raise TooLarge(g.n, cap)


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: tuple
    position: int | None = None
    detail: str = ""

    def __str__(self):
        where = f" at position {self.position}" if self.position is not None else ""
        text = f"{self.kind}{where}: {' '.join(map(str, self.witness))}"
        return f"{text} ({self.detail})" if self.detail else text


# -- order properties -------------------------------------------------------

def atfree_order_violation(o: BetweennessOracle, tau) -> Violation | None:
    """Least triple (x, y, z) in B_D whose middle comes after both ends."""
    g = o.graph
    tau = as_ordering(g, tau)
    pos = [tau.position_of[v] for v in g.names]
    for x, y, z in o.triples():
        if pos[y] > pos[x] and pos[y] > pos[z]:
            return Violation(
                "betweenness-triple", (g.names[x], g.names[y], g.names[z]), pos[y],
                "middle vertex follows both ends",
            )
    return None


def is_atfree_order(o: BetweennessOracle, tau) -> bool:
    return atfree_order_violation(o, tau) is None


def bilateral_violation(o: BetweennessOracle, tau) -> Violation | None:
    g = o.graph
    tau = as_ordering(g, tau)
    pos = [tau.position_of[v] for v in g.names]
    for x, y, z in o.triples():
        if not min(pos[x], pos[z]) < pos[y] < max(pos[x], pos[z]):
            return Violation(
                "betweenness-triple", (g.names[x], g.names[y], g.names[z]), pos[y],
                "middle vertex is not between the ends",
            )
    return None


def is_bilateral_atfree_order(o: BetweennessOracle, tau) -> bool:
    return bilateral_violation(o, tau) is None


def prefixes_convex(o: BetweennessOracle, tau) -> bool:
    """Every prefix of ``tau`` is convex (the set formulation of an AT-free order)."""
    g = o.graph
    mask = 0
    for i in order_indices(g, as_ordering(g, tau)):
        mask |= 1 << i
        if not o.is_convex_mask(mask):
            return False
    return True


def prefixes_connected(g: Graph, tau) -> bool:
    mask = 0
    for k, i in enumerate(order_indices(g, as_ordering(g, tau))):
        if k and not g.adj[i] & mask:
            return False
        mask |= 1 << i
    return True


def first_disconnected_prefix(g: Graph, tau) -> int | None:
    """Length of the shortest prefix inducing a disconnected subgraph, or None."""
    mask = 0
    for k, i in enumerate(order_indices(g, as_ordering(g, tau))):
        mask |= 1 << i
        start = (mask & -mask).bit_length() - 1
        if reach_mask(g, start, mask) != mask:
            return k + 1
    return None


# -- dominating pairs -------------------------------------------------------

def _dp_witness(g: Graph, s: int, t: int, allowed: int):
    """None if (s, t) dominate the subgraph induced by ``allowed``.

    Otherwise ``(w, path)``: a vertex ``w`` and an s-t path it avoids, or
    ``(None, None)`` when s and t lie in different components.
    """
    if not reach_mask(g, s, allowed) >> t & 1:
        return None, None
    rest = allowed & ~(g.closed_mask(s) | g.closed_mask(t))
    for w in bits(rest):
        inside = allowed & ~g.closed_mask(w)
        if reach_mask(g, s, inside) >> t & 1:
            return w, shortest_path_within(g, s, t, inside)
    return None


def dominating_pair_witness(g: Graph, s: Vertex, t: Vertex) -> tuple | None:
    """None if (s, t) is a dominating pair, else ``(w, Path)`` with w avoided by the path."""
    si, ti = g.idx(s), g.idx(t)
    if si == ti:
        raise ValueError("s and t must differ")
    found = _dp_witness(g, si, ti, g.full_mask)
    if found is None:
        return None
    w, path = found
    if w is None:
        return None, None
    return g.names[w], Path(tuple(g.names[i] for i in path), chordless=True)


def is_dominating_pair(g: Graph, s: Vertex, t: Vertex) -> bool:
    return dominating_pair_witness(g, s, t) is None


def dominating_pairs(g: Graph) -> list:
    """All unordered dominating pairs {s, t}, s before t canonically."""
    out = []
    for si in range(g.n):
        for ti in range(si + 1, g.n):
            if _dp_witness(g, si, ti, g.full_mask) is None:
                out.append((g.names[si], g.names[ti]))
    return out


def monotone_dp_violation(g: Graph, tau) -> Violation | None:
    """Least i such that (v_1, v_i) is not a dominating pair of G[v_1..v_i]."""
    tau = as_ordering(g, tau)
    seq = order_indices(g, tau)
    if not seq:
        return None
    s = seq[0]
    mask = 1 << s
    for i in range(1, len(seq)):
        t = seq[i]
        mask |= 1 << t
        found = _dp_witness(g, s, t, mask)
        if found is not None:
            w, path = found
            if w is None:
                witness = (g.names[s], g.names[t])
                detail = "ends lie in different components of the prefix"
            else:
                witness = (g.names[s], g.names[t], g.names[w])
                detail = "path " + " ".join(str(g.names[j]) for j in path) + " avoids " + str(g.names[w])
            return Violation("dominating-pair", witness, i + 1, detail)
    return None


def is_monotone_dp_order(g: Graph, tau) -> bool:
    return monotone_dp_violation(g, tau) is None


# -- search validity ----------------------------------------------------------

def bfs_violation(g: Graph, tau) -> Violation | None:
    """Check the first-earlier-neighbour positions never decrease along ``tau``."""
    tau = as_ordering(g, tau)
    seq = order_indices(g, tau)
    pos = {v: k for k, v in enumerate(seq)}
    last = -1
    for k, v in enumerate(seq[1:], start=1):
        earlier = [pos[w] for w in g.neighbour_indices(v) if pos[w] < k]
        if not earlier:
            return Violation("bfs-validity", (g.names[v],), k + 1, "no earlier neighbour")
        first = min(earlier)
        if first < last:
            return Violation(
                "bfs-validity", (g.names[v], g.names[seq[first]]), k + 1,
                "should have been queued before its predecessor",
            )
        last = first
    return None


def is_bfs_order(g: Graph, tau) -> bool:
    return bfs_violation(g, tau) is None


def lbfs_violation(g: Graph, tau) -> Violation | None:
    """Replay LBFS with literal labels, forcing each step to the next ``tau`` vertex."""
    tau = as_ordering(g, tau)
    seq = order_indices(g, tau)
    n = g.n
    labels: list = [[] for _ in range(n)]
    if seq:
        labels[seq[0]] = [n]
    numbered = [False] * n
    for k, v in enumerate(seq):
        best = max((labels[u] for u in range(n) if not numbered[u]))
        if labels[v] < best:
            rival = next(u for u in range(n) if not numbered[u] and labels[u] == best)
            return Violation(
                "lbfs-validity", (g.names[v], g.names[rival]), k + 1,
                "another vertex carries a larger label",
            )
        numbered[v] = True
        for u in g.neighbour_indices(v):
            if not numbered[u]:
                labels[u].append(n - k - 1)
    return None


def is_lbfs_order(g: Graph, tau) -> bool:
    return lbfs_violation(g, tau) is None


# -- spine property -----------------------------------------------------------

class _DominationTables:
    """Dominating-pair tables for induced subgraphs, cached by vertex mask."""

    def __init__(self, g: Graph):
        self.g = g
        self._cache: dict = {}

    def pairs(self, mask: int) -> set:
        """Ordered index pairs (s, t), s != t, that dominate G[mask]."""
        got = self._cache.get(mask)
        if got is not None:
            return got
        g = self.g
        members = list(bits(mask))
        labels = {}
        for w in members:
            inside = mask & ~g.closed_mask(w)
            lab = {}
            cid = 0
            rest = inside
            while rest:
                start = (rest & -rest).bit_length() - 1
                comp = reach_mask(g, start, inside)
                for i in bits(comp):
                    lab[i] = cid
                rest &= ~comp
                cid += 1
            labels[w] = lab
        comp_of = {}
        rest = mask
        cid = 0
        while rest:
            start = (rest & -rest).bit_length() - 1
            comp = reach_mask(g, start, mask)
            for i in bits(comp):
                comp_of[i] = cid
            rest &= ~comp
            cid += 1
        out = set()
        for s in members:
            for t in members:
                if s == t or comp_of[s] != comp_of[t]:
                    continue
                for w in members:
                    lab = labels[w]
                    if s in lab and t in lab and lab[s] == lab[t]:
                        break
                else:
                    out.add((s, t))
        self._cache[mask] = out
        return out


def _spine_failure(g: Graph, mask: int, tables: _DominationTables):
    """None, the least failing pair (s, t), or () when G[mask] has no dominating pair."""
    pairs = tables.pairs(mask)
    if not pairs and mask & (mask - 1):
        return ()
    for s, t in sorted(pairs):
        if g.adj[s] >> t & 1:
            continue
        side = reach_mask(g, s, mask & ~(1 << t))
        inner = tables.pairs(side)
        if not any((s, tp) in inner for tp in bits(g.adj[t] & side)):
            return s, t
    return None


def spine_violation(g: Graph) -> Violation | None:
    found = _spine_failure(g, g.full_mask, _DominationTables(g))
    if found is None:
        return None
    return _spine_violation(g, found, "")


def _spine_violation(g: Graph, found: tuple, where: str) -> Violation:
    if not found:
        return Violation("spine", (), None, "no dominating pair" + where)
    return Violation("spine", (g.names[found[0]], g.names[found[1]]), None,
                     "no neighbour of the second vertex continues the pair" + where)


def has_spine_property(g: Graph) -> bool:
    """At least one dominating pair exists, and every non-adjacent one (s, t) has a
    neighbour t' of t dominating together with s the component of G - t holding s.
    """
    return spine_violation(g) is None


def hereditary_spine_violation(g: Graph, cap: int | None = None) -> Violation | None:
    """Least connected induced subgraph (by mask) lacking the spine property."""
    _check_cap(g, cap)
    tables = _DominationTables(g)
    for mask in range(1, 1 << g.n):
        start = (mask & -mask).bit_length() - 1
        if reach_mask(g, start, mask) != mask:
            continue
        found = _spine_failure(g, mask, tables)
        if found is not None:
            return _spine_violation(
                g, found, " in subgraph on " + " ".join(str(v) for v in g.names_of(mask))
            )
    return None


def spine_property_hereditary(g: Graph, cap: int | None = None) -> bool:
    return hereditary_spine_violation(g, cap) is None


# -- brute-force existence oracles --------------------------------------------

def _triples_by_vertex(o: BetweennessOracle) -> list:
    per: list = [[] for _ in range(o.graph.n)]
    for x, y, z in o.triples():
        per[x].append((x, y, z))
        per[y].append((x, y, z))
        per[z].append((x, y, z))
    return per


def exists_atfree_order_bruteforce(g: Graph, o: BetweennessOracle, cap: int | None = None):
    """Some permutation in which no B_D middle follows both of its ends, or None.

    Placing ``v`` is illegal exactly when some (x, v, z) has both ends placed,
    a condition on the placed set alone, so dead sets are memoised.
    """
    _check_cap(g, cap)
    n = g.n
    per = _triples_by_vertex(o)
    dead: set = set()
    order: list = []

    def extend(placed: int) -> bool:
        if placed == g.full_mask:
            return True
        if placed in dead:
            return False
        for v in range(n):
            if placed >> v & 1:
                continue
            if any(y == v and placed >> x & 1 and placed >> z & 1 for x, y, z in per[v]):
                continue
            order.append(v)
            if extend(placed | 1 << v):
                return True
            order.pop()
        dead.add(placed)
        return False

    if not extend(0):
        return None
    return Ordering(tuple(g.names[i] for i in order), "external")


def exists_bilateral_order_bruteforce(g: Graph, o: BetweennessOracle, cap: int | None = None):
    """Some bilateral AT-free ordering, or None.

    Every triple must see exactly one end placed when its middle is placed;
    legality of the next step depends only on the placed set.
    """
    _check_cap(g, cap)
    n = g.n
    per = _triples_by_vertex(o)
    dead: set = set()
    order: list = []

    def legal(placed: int, v: int) -> bool:
        for x, y, z in per[v]:
            if y == v:
                if (placed >> x & 1) == (placed >> z & 1):
                    return False
            else:
                other = z if x == v else x
                if (placed >> y & 1) != (placed >> other & 1):
                    return False
        return True

    def extend(placed: int) -> bool:
        if placed == g.full_mask:
            return True
        if placed in dead:
            return False
        for v in range(n):
            if not placed >> v & 1 and legal(placed, v):
                order.append(v)
                if extend(placed | 1 << v):
                    return True
                order.pop()
        dead.add(placed)
        return False

    if not extend(0):
        return None
    return Ordering(tuple(g.names[i] for i in order), "external")


def exists_atfree_bfs_order_bruteforce(g: Graph, o: BetweennessOracle, cap: int | None = None):
    """Some permutation that is both a BFS order and an AT-free order, or None."""
    _check_cap(g, cap)
    n = g.n
    per = _triples_by_vertex(o)
    pos = [-1] * n
    order: list = []

    def extend(placed: int, last_first: int) -> bool:
        k = len(order)
        if k == n:
            return True
        for v in range(n):
            if placed >> v & 1:
                continue
            if k:
                earlier = [pos[w] for w in g.neighbour_indices(v) if placed >> w & 1]
                if not earlier or min(earlier) < last_first:
                    continue
                first = min(earlier)
            else:
                first = -1
            if any(y == v and placed >> x & 1 and placed >> z & 1 for x, y, z in per[v]):
                continue
            pos[v] = k
            order.append(v)
            if extend(placed | 1 << v, first):
                return True
            order.pop()
            pos[v] = -1
        return False

    if not extend(0, -1):
        return None
    return Ordering(tuple(g.names[i] for i in order), "external")


def recheck(violation: Violation, g: Graph, o: BetweennessOracle, tau: Any = None) -> bool:
    """True when the witness of ``violation`` independently fails its predicate."""
    w = violation.witness
    if violation.kind == "betweenness-triple":
        return o.is_between(*w)
    if violation.kind == "dominating-pair":
        tau = as_ordering(g, tau)
        prefix = g.induced_subgraph(tau.sequence[: violation.position])
        return not is_dominating_pair(prefix, w[0], w[1])
    if violation.kind == "spine":
        if not w:
            return not dominating_pairs(g)
        return is_dominating_pair(g, w[0], w[1]) and not g.has_edge(w[0], w[1])
    raise ValueError(f"no independent re-check for {violation.kind}")
