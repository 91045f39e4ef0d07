"""Seeded corpora of small connected graphs for the property suites."""

from __future__ import annotations

import random
from typing import Iterator

from .convexity import BetweennessOracle, find_asteroidal_triple
from .errors import FilterTooRestrictive, TooLarge
from .graph import Graph, is_connected
from .pipelines import find_bad_claw, find_claw

FILTERS = ("any", "atfree", "clawfree-atfree", "badclawfree-atfree")
FAMILIES = ("gnp", "interval", "unit-interval", "tree-plus")
DEFAULT_FLOOR = 0.01


def _names(n):
    return [str(i) for i in range(1, n + 1)]


def _gnp(rng, n):
    p = rng.uniform(0.15, 0.9)
    return [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]


def _interval(rng, n):
    spans = []
    for _ in range(n):
        a = rng.uniform(0, n)
        spans.append((a, a + rng.uniform(0.3, 3.0)))
    return [
        (i, j) for i in range(n) for j in range(i + 1, n)
        if spans[i][0] <= spans[j][1] and spans[j][0] <= spans[i][1]
    ]


def _unit_interval(rng, n):
    pts = [rng.uniform(0, n / 1.6) for _ in range(n)]
    return [(i, j) for i in range(n) for j in range(i + 1, n) if abs(pts[i] - pts[j]) <= 1.0]


def _tree_plus(rng, n):
    edges = {(rng.randrange(i), i) for i in range(1, n)}
    for _ in range(rng.randint(0, n)):
        i, j = rng.sample(range(n), 2)
        edges.add((min(i, j), max(i, j)))
    return sorted(edges)


_BUILDERS = {
    "gnp": _gnp,
    "interval": _interval,
    "unit-interval": _unit_interval,
    "tree-plus": _tree_plus,
}


def random_graph(rng: random.Random, n: int, family: str) -> Graph:
    order = list(range(n))
    rng.shuffle(order)
    names = _names(n)
    edges = _BUILDERS[family](rng, n)
    # relabel so canonical order does not follow the construction order
    return Graph(names, [(names[order[i]], names[order[j]]) for i, j in edges])


def passes_filter(g: Graph, flt: str) -> bool:
    if flt == "any":
        return True
    o = BetweennessOracle(g)
    if find_asteroidal_triple(g, o) is not None:
        return False
    if flt == "atfree":
        return True
    if flt == "clawfree-atfree":
        return find_claw(g) is None
    if flt == "badclawfree-atfree":
        return find_bad_claw(g, o) is None
    raise ValueError(f"unknown filter {flt!r}; choose from {', '.join(FILTERS)}")


def iter_corpus(seed: int, n_range: tuple, flt: str = "any", *,
                families=FAMILIES, floor: float = DEFAULT_FLOOR,
                cap: int | None = None, min_attempts: int = 500) -> Iterator[Graph]:
    """Endless deterministic stream of connected graphs passing ``flt``."""
    lo, hi = n_range
    if flt not in FILTERS:
        raise ValueError(f"unknown filter {flt!r}; choose from {', '.join(FILTERS)}")
    if cap is not None and hi > cap:
        raise TooLarge(hi, cap)
    rng = random.Random(seed)
    attempts = accepted = 0
    while True:
        attempts += 1
        g = random_graph(rng, rng.randint(lo, hi), rng.choice(families))
        if is_connected(g) and passes_filter(g, flt):
            accepted += 1
            yield g
        elif attempts >= min_attempts and accepted < floor * attempts:
            raise FilterTooRestrictive(
                f"filter {flt!r} accepted {accepted} of {attempts} candidates"
            )


def generate_corpus(seed: int, n_range, count: int, flt: str = "any", **kw) -> list:
    if isinstance(n_range, int):
        n_range = (n_range, n_range)
    stream = iter_corpus(seed, tuple(n_range), flt, **kw)
    return [next(stream) for _ in range(count)]


def connected_graphs_up_to(n_max: int) -> list:
    """Every connected graph on 1..n_max vertices up to isomorphism (n_max <= 7)."""
    import networkx as nx

    if n_max > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    out = []
    for h in nx.graph_atlas_g():
        if 0 < h.number_of_nodes() <= n_max and nx.is_connected(h):
            names = [str(v + 1) for v in sorted(h.nodes)]
            out.append(Graph(names, [(str(u + 1), str(v + 1)) for u, v in h.edges]))
    return out
