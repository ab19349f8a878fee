"""Finite directed graphs and their finite paths.

A graph is a finite vertex set, a finite list of labelled edges, and an
optional set of vertices flagged as infinite emitters.  A flagged vertex
stands for a vertex with infinitely many out-edges of which only the listed
ones are representable; the flag makes the vertex singular.  Regular means:
at least one listed out-edge and no flag.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import GraphFormatError, PathError


@dataclass(frozen=True)
class Edge:
    id: str
    src: str
    dst: str


@dataclass(frozen=True)
class Path:
    """A finite path: a tuple of edge ids plus the source vertex.

    The length-0 path at a vertex v is Path((), v).  For nonempty paths
    `at` is still the source vertex, so equality and ordering work on the
    raw fields.
    """

    edges: tuple[str, ...]
    at: str

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def is_vertex(self) -> bool:
        return not self.edges


def path_key(p: Path):
    """Canonical order: by length, then lexicographically by edge ids
    (by vertex id for length 0)."""
    return (len(p.edges), p.edges, p.at)


def path_le(shorter: Path, longer: Path) -> bool:
    """Prefix order on paths with a common source."""
    if shorter.at != longer.at:
        return False
    n = len(shorter.edges)
    return longer.edges[:n] == shorter.edges


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    infinite_emitters: frozenset[str]

    @cached_property
    def edge_map(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def edge_src(self) -> dict[str, str]:
        return {e.id: e.src for e in self.edges}

    @cached_property
    def edge_dst(self) -> dict[str, str]:
        return {e.id: e.dst for e in self.edges}

    @cached_property
    def out(self) -> dict[str, tuple[str, ...]]:
        table: dict[str, list[str]] = {v: [] for v in self.vertices}
        for e in self.edges:
            table[e.src].append(e.id)
        return {v: tuple(sorted(ids)) for v, ids in table.items()}

    @cached_property
    def regular_vertices(self) -> frozenset[str]:
        return frozenset(
            v for v in self.vertices
            if self.out[v] and v not in self.infinite_emitters
        )

    @cached_property
    def singular_vertices(self) -> frozenset[str]:
        return frozenset(self.vertices) - self.regular_vertices

    @cached_property
    def special_edge(self) -> dict[str, str]:
        """For each regular vertex, the lexicographically least out-edge id.

        This is the edge whose ee^* the normal form eliminates."""
        return {v: self.out[v][0] for v in self.regular_vertices}

    def out_edges(self, v: str) -> tuple[str, ...]:
        try:
            return self.out[v]
        except KeyError:
            raise PathError(f"unknown vertex: {v}") from None

    def is_regular(self, v: str) -> bool:
        return v in self.regular_vertices

    # -- paths ---------------------------------------------------------

    def vertex_path(self, v: str) -> Path:
        if v not in self.out:
            raise PathError(f"unknown vertex: {v}")
        return Path((), v)

    def path(self, edge_ids: Iterable[str]) -> Path:
        """Build and validate a path from consecutive edge ids."""
        ids = tuple(edge_ids)
        if not ids:
            raise PathError("empty edge sequence; use vertex_path")
        prev = None
        for i in ids:
            e = self.edge_map.get(i)
            if e is None:
                raise PathError(f"unknown edge: {i}")
            if prev is not None and prev != e.src:
                raise PathError(f"edges do not concatenate at {i}: {prev} != {e.src}")
            prev = e.dst
        return Path(ids, self.edge_map[ids[0]].src)

    def check_path(self, p: Path) -> Path:
        if p.is_vertex:
            return self.vertex_path(p.at)
        q = self.path(p.edges)
        if q.at != p.at:
            raise PathError(f"path source mismatch: {p.at} != {q.at}")
        return q

    def source(self, p: Path) -> str:
        return p.at

    def range_of(self, p: Path) -> str:
        if p.is_vertex:
            return p.at
        return self.edge_dst[p.edges[-1]]

    def concat(self, p: Path, q: Path) -> Path:
        if self.range_of(p) != q.at:
            raise PathError(
                f"cannot concatenate: range {self.range_of(p)} != source {q.at}")
        if p.is_vertex:
            return q
        return Path(p.edges + q.edges, p.at)

    def paths(self, n: int, source: str | None = None) -> list[Path]:
        """All paths of length n, lexicographic in the edge-id sequence.

        With no source, paths from every vertex, still globally sorted."""
        if n < 0:
            raise PathError(f"negative path length: {n}")
        if source is not None and source not in self.out:
            raise PathError(f"unknown source vertex: {source}")
        starts = [source] if source is not None else sorted(self.vertices)
        found: list[Path] = []

        def grow(prefix: tuple[str, ...], v: str, remaining: int):
            if remaining == 0:
                found.append(Path(prefix, start))
                return
            for e in self.out[v]:
                grow(prefix + (e,), self.edge_dst[e], remaining - 1)

        for start in starts:
            grow((), start, n)
        found.sort(key=lambda p: (p.edges, p.at))
        return found


def classify_vertices(g: Graph) -> tuple[frozenset[str], frozenset[str]]:
    return g.regular_vertices, g.singular_vertices


_TOP_FIELDS = {"vertices", "edges", "infinite_emitters"}
_EDGE_FIELDS = {"id", "src", "dst"}


def load_graph(raw: Mapping) -> Graph:
    """Validate a graph description (already parsed from its file)."""
    if not isinstance(raw, Mapping):
        raise GraphFormatError("graph document must be a mapping")
    unknown = set(raw) - _TOP_FIELDS
    if unknown:
        raise GraphFormatError(f"unknown field: {sorted(unknown)[0]}")
    for need in ("vertices", "edges"):
        if need not in raw:
            raise GraphFormatError(f"missing field: {need}")

    vertices = raw["vertices"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise GraphFormatError("vertices must be a list of strings")
    if not vertices:
        raise GraphFormatError("empty vertex set")
    seen: set[str] = set()
    for v in vertices:
        if v in seen:
            raise GraphFormatError(f"duplicate identifier: {v}")
        seen.add(v)

    if not isinstance(raw["edges"], list):
        raise GraphFormatError("edges must be a list")
    edges: list[Edge] = []
    for rec in raw["edges"]:
        if not isinstance(rec, Mapping):
            raise GraphFormatError("edge record must be a mapping")
        bad = set(rec) - _EDGE_FIELDS
        if bad:
            raise GraphFormatError(f"unknown field: {sorted(bad)[0]}")
        if set(rec) != _EDGE_FIELDS:
            raise GraphFormatError(f"edge record needs fields id, src, dst: {dict(rec)}")
        i, s, d = rec["id"], rec["src"], rec["dst"]
        if not all(isinstance(x, str) for x in (i, s, d)):
            raise GraphFormatError(f"edge fields must be strings: {dict(rec)}")
        if i in seen:
            raise GraphFormatError(f"duplicate identifier: {i}")
        seen.add(i)
        if s not in vertices:
            raise GraphFormatError(f"dangling endpoint: edge {i} src {s}")
        if d not in vertices:
            raise GraphFormatError(f"dangling endpoint: edge {i} dst {d}")
        edges.append(Edge(i, s, d))

    emitters = raw.get("infinite_emitters", [])
    if not isinstance(emitters, list) or not all(isinstance(v, str) for v in emitters):
        raise GraphFormatError("infinite_emitters must be a list of strings")
    for v in emitters:
        if v not in vertices:
            raise GraphFormatError(f"infinite_emitters names unknown vertex: {v}")

    return Graph(
        vertices=tuple(sorted(vertices)),
        edges=tuple(sorted(edges, key=lambda e: e.id)),
        infinite_emitters=frozenset(emitters),
    )


def graph_from(vertices: Iterable[str],
               edges: Iterable[tuple[str, str, str]],
               infinite_emitters: Iterable[str] = ()) -> Graph:
    """Shorthand builder: edges as (id, src, dst) triples."""
    return load_graph({
        "vertices": list(vertices),
        "edges": [{"id": i, "src": s, "dst": d} for i, s, d in edges],
        "infinite_emitters": list(infinite_emitters),
    })


def parse_graph_file(filename: str) -> Graph:
    try:
        with open(filename, encoding="utf-8") as fh:
            raw = json.load(fh)
    except json.JSONDecodeError as ex:
        raise GraphFormatError(f"not valid JSON: {filename}: {ex}") from ex
    return load_graph(raw)


def condition_l(g: Graph) -> tuple[bool, Path | None]:
    """Does every cycle admit an exit?

    A cycle has no exit exactly when each of its vertices has the cycle edge
    as its only listed out-edge and carries no infinite-emitter flag (the
    unlisted edges of a flagged vertex are exits).  Such cycles live in the
    functional subgraph of unflagged out-degree-1 vertices, so following
    unique successors finds one if it exists.  Returns (verdict, witness),
    the witness being an exitless cycle starting at its least vertex.
    """
    trapped = {
        v for v in g.vertices
        if len(g.out[v]) == 1 and v not in g.infinite_emitters
    }
    state: dict[str, int] = {}  # 0 in progress, 1 cleared
    for start in sorted(trapped):
        if state.get(start) == 1:
            continue
        chain: list[str] = []
        pos: dict[str, int] = {}
        v = start
        while v in trapped and state.get(v) != 1 and v not in pos:
            pos[v] = len(chain)
            chain.append(v)
            v = g.edge_dst[g.out[v][0]]
        if v in pos:  # walked into our own chain: a cycle
            cycle_vs = chain[pos[v]:]
            least = min(cycle_vs)
            i = cycle_vs.index(least)
            ordered = cycle_vs[i:] + cycle_vs[:i]
            witness = g.path([g.out[w][0] for w in ordered])
            return False, witness
        for w in chain:
            state[w] = 1
    return True, None
