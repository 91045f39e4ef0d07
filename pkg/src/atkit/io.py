"""Edge-list graph documents, DOT export and the named figure fixtures.

Format: a header line ``n m`` followed by ``m`` lines ``u v``. Names are any
whitespace-free tokens and get canonical indices in order of first mention.
Blank lines and ``#`` comments are ignored, except the directive
``#! vertices NAME...`` which fixes the vertex table up front (needed for
isolated vertices or when the edge list would introduce names in another
order).
"""

from __future__ import annotations

import hashlib
from pathlib import Path as FsPath
from types import SimpleNamespace

from .errors import DuplicateEdge, ParseError, SelfLoop
from .graph import Graph

VERTEX_DIRECTIVE = "#! vertices"


def parse_graph(text: str) -> Graph:
    header = None
    declared: list | None = None
    edges: list = []
    seen: set = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith(VERTEX_DIRECTIVE):
            declared = line[len(VERTEX_DIRECTIVE):].split()
            if len(set(declared)) != len(declared):
                raise ParseError(lineno, "duplicate name in vertex table")
            continue
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(lineno, f"expected two tokens, got {len(tokens)}")
        if header is None:
            try:
                header = (int(tokens[0]), int(tokens[1]))
            except ValueError:
                raise ParseError(lineno, "header must be 'n m'") from None
            if header[0] < 0 or header[1] < 0:
                raise ParseError(lineno, "negative count in header")
            continue
        u, v = tokens
        if u == v:
            raise SelfLoop(lineno, f"self-loop at {u}")
        key = frozenset((u, v))
        if key in seen:
            raise DuplicateEdge(lineno, f"duplicate edge {u} {v}")
        seen.add(key)
        edges.append((u, v))
    if header is None:
        raise ParseError(1, "missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise ParseError(0, f"header declares {m} edges, found {len(edges)}")
    if declared is not None:
        unknown = {x for e in edges for x in e} - set(declared)
        if unknown:
            raise ParseError(0, f"edge endpoints missing from vertex table: {sorted(unknown)}")
    g = Graph(declared or (), edges)
    if g.n != n:
        raise ParseError(0, f"header declares {n} vertices, found {g.n}")
    return g


def _needs_directive(g: Graph) -> bool:
    intro: list = []
    seen: set = set()
    for e in g.edges:
        for v in e:
            if v not in seen:
                seen.add(v)
                intro.append(v)
    return tuple(intro) != g.names


def serialise_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    if _needs_directive(g):
        lines.append(VERTEX_DIRECTIVE + " " + " ".join(map(str, g.names)))
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    return parse_graph(FsPath(path).read_text())


def write_graph(g: Graph, path) -> None:
    FsPath(path).write_text(serialise_graph(g))


def to_dot(g: Graph, name: str = "G") -> str:
    """Graphviz rendering for inspection; there is no DOT reader."""
    lines = [f"graph {name} {{"]
    lines.extend(f'  "{v}";' for v in g.names)
    lines.extend(f'  "{u}" -- "{v}";' for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


# -- fixtures ---------------------------------------------------------------

def _pairs(spec: str) -> list:
    return [tuple(e.split("-")) for e in spec.split()]


FIG1_EDGES = _pairs("1-2 2-3 3-4 3-5 4-6 5-6 6-7 7-8")
FIG2_EDGES = _pairs("1-2 2-4 2-5 1-3 3-5")
FIG2P_EDGES = FIG2_EDGES + _pairs("v1-v2 v2-v3 v3-1")
FIG3_EDGES = _pairs("1-2 2-3 3-a a-4 4-2 2-z z-4 z-c c-a c-b b-2")
FIG4_EDGES = _pairs(
    "b'-5 5-z' z'-4 4-2 2-5 2-a' 2-1 1-3 3-a 3-6 6-b 6-z z-7 7-3"
)

FIG1_ARBITRARY = ("4", "5", "2", "7", "3", "6", "1", "8")
FIG1_LEXCOMP = ("4", "5", "3", "6", "2", "7", "1", "8")
FIG1_BFSCONV = ("1", "2", "3", "4", "5", "6", "7", "8")
FIG2_BFSCONV = ("1", "2", "3", "4", "5")
FIG2P_BFSCONV = ("v1", "v2", "v3", "1", "2", "3", "5", "4")
FIG3_TAUS = (
    ("1", "2", "4", "z", "3", "b", "a", "c"),
    ("c", "a", "b", "z", "4", "3", "2", "1"),
    ("1", "2", "3", "4", "z", "b", "a", "c"),
)
FIG4_TAUS = (
    ("1", "2", "3", "a'", "4", "5", "a", "6", "7", "z'", "b'", "b", "z"),
    ("z", "7", "6", "3", "b", "a", "1", "2", "5", "4", "a'", "b'", "z'"),
    ("z'", "4", "5", "2", "b'", "a'", "1", "3", "a", "6", "7", "b", "z"),
)


def path_graph(n: int) -> Graph:
    names = [str(i) for i in range(1, n + 1)]
    return Graph(names, list(zip(names, names[1:])))


def cycle_graph(n: int) -> Graph:
    names = [str(i) for i in range(1, n + 1)]
    return Graph(names, list(zip(names, names[1:])) + [(names[-1], names[0])])


def complete_graph(n: int) -> Graph:
    names = [str(i) for i in range(1, n + 1)]
    return Graph(names, [(u, v) for k, u in enumerate(names) for v in names[k + 1:]])


def fixtures() -> SimpleNamespace:
    """The figure graphs plus path/cycle constructors ``P(n)`` and ``C(n)``."""
    return SimpleNamespace(
        fig1=Graph(edges=FIG1_EDGES),
        fig2G=Graph(edges=FIG2_EDGES),
        fig2Gp=Graph(edges=FIG2P_EDGES),
        fig3=Graph(edges=FIG3_EDGES),
        fig4=Graph(edges=FIG4_EDGES),
        P=path_graph,
        C=cycle_graph,
        K=complete_graph,
    )


NAMED_FIXTURES = ("fig1", "fig2G", "fig2Gp", "fig3", "fig4")


def named_fixture(name: str) -> Graph:
    fx = fixtures()
    if name in NAMED_FIXTURES:
        return getattr(fx, name)
    if name[:1] in "PCK" and name[1:].isdigit():
        return getattr(fx, name[:1])(int(name[1:]))
    raise KeyError(name)
