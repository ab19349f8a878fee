"""The boundary path space and the graph groupoid, at desk scale.

Boundary points are finite paths ending at a singular vertex together with
eventually periodic infinite paths; fully aperiodic infinite paths have no
finite description and stay out of scope.  A point is stored canonically:

  * Finite(path): r(path) singular; the length-0 path at a singular vertex
    is allowed.
  * EvPeriodic(prefix, cycle): the cycle is primitive (not a power of a
    shorter loop) and the prefix is shortest possible; whenever the prefix
    ends with the cycle's last edge, that edge is absorbed by rotating the
    cycle backwards.  Purely periodic points have an empty prefix.

Two descriptions denote the same point iff their canonical forms are equal,
so dataclass equality decides point equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd

from .errors import (ExpressionError, GroupoidError, NotComposableError,
                     PathError, PreconditionError)
from .graphs import Graph, Path, path_le


@dataclass(frozen=True)
class BoundaryPath:
    prefix: Path
    cycle: Path | None = None  # None: a finite boundary path

    @property
    def finite(self) -> bool:
        return self.cycle is None


def boundary_finite(g: Graph, p: Path) -> BoundaryPath:
    p = g.check_path(p)
    end = g.range_of(p)
    if end not in g.singular_vertices:
        raise PathError(
            f"finite boundary path must end at a singular vertex, not {end}")
    return BoundaryPath(p, None)


def boundary_periodic(g: Graph, prefix: Path, cycle: Path) -> BoundaryPath:
    """Canonicalize prefix · cycle^infinity."""
    prefix = g.check_path(prefix)
    cycle = g.check_path(cycle)
    if cycle.is_vertex:
        raise PathError("empty cycle")
    if g.range_of(cycle) != cycle.at:
        raise PathError(f"cycle is not a loop: {cycle.edges}")
    if g.range_of(prefix) != cycle.at:
        raise PathError("prefix does not end where the cycle starts")

    edges = cycle.edges
    n = len(edges)
    for d in range(1, n + 1):
        if n % d == 0 and edges[:d] * (n // d) == edges:
            edges = edges[:d]
            break
    cycle = Path(edges, cycle.at)

    pre = prefix.edges
    while pre and pre[-1] == cycle.edges[-1]:
        last = cycle.edges[-1]
        pre = pre[:-1]
        cycle = Path((last,) + cycle.edges[:-1], g.edge_src[last])
    new_prefix = Path(pre, prefix.at) if pre else Path((), cycle.at)
    return BoundaryPath(new_prefix, cycle)


def canonical_boundary(g: Graph, prefix: Path, cycle: Path | None = None) -> BoundaryPath:
    if cycle is None:
        return boundary_finite(g, prefix)
    return boundary_periodic(g, prefix, cycle)


def edge_at(x: BoundaryPath, i: int) -> str | None:
    """The (i+1)-th edge of x, or None past the end of a finite point."""
    pre = x.prefix.edges
    if i < len(pre):
        return pre[i]
    if x.cycle is None:
        return None
    c = x.cycle.edges
    return c[(i - len(pre)) % len(c)]


def source_of(x: BoundaryPath) -> str:
    return x.prefix.at


def shift(g: Graph, x: BoundaryPath, n: int) -> BoundaryPath:
    """Drop the first n edges."""
    if n < 0:
        raise PreconditionError(f"negative shift: {n}")
    pre = x.prefix.edges
    if x.cycle is None:
        if n > len(pre):
            raise PreconditionError(f"shift {n} exceeds length {len(pre)}")
        if n == len(pre):
            return BoundaryPath(Path((), g.range_of(x.prefix)), None)
        return BoundaryPath(Path(pre[n:], g.edge_src[pre[n]]), None)
    if n < len(pre):
        return BoundaryPath(Path(pre[n:], g.edge_src[pre[n]]), x.cycle)
    if n == len(pre):
        return BoundaryPath(Path((), x.cycle.at), x.cycle)
    c = x.cycle.edges
    j = (n - len(pre)) % len(c)
    rotated = Path(c[j:] + c[:j], g.edge_src[c[j]])
    return BoundaryPath(Path((), rotated.at), rotated)


@dataclass(frozen=True)
class CylinderSet:
    """Z(mu \\ excluded): boundary points through mu whose next edge avoids
    the excluded set."""
    mu: Path
    excluded: frozenset[str] = frozenset()


def cylinder(g: Graph, mu: Path, excluded=()) -> CylinderSet:
    mu = g.check_path(mu)
    allowed = set(g.out_edges(g.range_of(mu)))
    bad = set(excluded) - allowed
    if bad:
        raise PathError(
            f"excluded edges must leave {g.range_of(mu)}: {sorted(bad)}")
    return CylinderSet(mu, frozenset(excluded))


def cylinder_membership(g: Graph, z: CylinderSet, x: BoundaryPath) -> bool:
    mu = z.mu
    if source_of(x) != mu.at:
        return False
    if x.cycle is None and len(x.prefix.edges) < len(mu.edges):
        return False
    for i, e in enumerate(mu.edges):
        if edge_at(x, i) != e:
            return False
    nxt = edge_at(x, len(mu.edges))
    return nxt is None or nxt not in z.excluded


def cylinder_intersect(g: Graph, a: CylinderSet, b: CylinderSet) -> CylinderSet | None:
    """Intersection, again a cylinder (or None for empty).

    Equal bases merge exclusions; a strict extension survives unless its
    continuation edge is excluded by the shorter base."""
    if len(a.mu.edges) < len(b.mu.edges):
        a, b = b, a
    if not path_le(b.mu, a.mu):
        return None
    if len(a.mu.edges) == len(b.mu.edges):
        return CylinderSet(a.mu, a.excluded | b.excluded)
    if a.mu.edges[len(b.mu.edges)] in b.excluded:
        return None
    return CylinderSet(a.mu, a.excluded)


@dataclass(frozen=True)
class GroupoidElement:
    """(x, k, y) with shift^m(x) = shift^n(y) and k = m - n; the witness
    (m, n) is the least such pair and never enters equality."""
    x: BoundaryPath
    k: int
    y: BoundaryPath
    witness: tuple[int, int] = field(compare=False)


def _tail_bounds(x: BoundaryPath) -> tuple[int, int]:
    pre = len(x.prefix.edges)
    cyc = len(x.cycle.edges) if x.cycle is not None else 1
    return pre, cyc


def make_groupoid_element(g: Graph, x: BoundaryPath, k: int, y: BoundaryPath) -> GroupoidElement:
    """Search for the least witness (m, n), m - n = k; raise if none exists.

    Past both prefixes the shifted pair recurs with period lcm of the cycle
    lengths, so the search is complete once n passes
    max(prefix lengths, -k adjustments) + lcm."""
    px, cx = _tail_bounds(x)
    py, cy = _tail_bounds(y)
    lcm = cx * cy // gcd(cx, cy)
    start = max(0, -k)
    stop = max(start, px - k, py) + lcm + 1
    for n in range(start, stop + 1):
        m = n + k
        if x.cycle is None and m > px:
            continue
        if y.cycle is None and n > py:
            continue
        if shift(g, x, m) == shift(g, y, n):
            return GroupoidElement(x, k, y, (m, n))
    raise GroupoidError(f"no witness: ({x}, {k}, {y}) is not a groupoid element")


def unit(x: BoundaryPath) -> GroupoidElement:
    return GroupoidElement(x, 0, x, (0, 0))


def inverse(gel: GroupoidElement) -> GroupoidElement:
    m, n = gel.witness
    return GroupoidElement(gel.y, -gel.k, gel.x, (n, m))


def compose(g: Graph, left: GroupoidElement, right: GroupoidElement) -> GroupoidElement:
    """(x, k, y)(y, l, z) = (x, k + l, z), witness recomputed minimal."""
    if left.y != right.x:
        raise NotComposableError(
            f"non-composable pair: range {left.y} != source {right.x}")
    return make_groupoid_element(g, left.x, left.k + right.k, right.y)


def isotropy(x: BoundaryPath) -> int:
    """d with {k : (x,k,x) in G} = dZ: the primitive period, or 0."""
    if x.cycle is None:
        return 0
    return len(x.cycle.edges)


def is_isolated(g: Graph, x: BoundaryPath) -> bool:
    """Whether {x} is open in the boundary.

    A finite point is isolated iff its endpoint is a true sink (a flagged
    emitter keeps unlisted continuations nearby).  An eventually periodic
    point is isolated iff every vertex on its cycle has exactly one listed
    out-edge and no flag, so the tail is forced."""
    if x.cycle is None:
        end = g.range_of(x.prefix)
        return not g.out_edges(end) and end not in g.infinite_emitters
    for e in x.cycle.edges:
        v = g.edge_src[e]
        if len(g.out[v]) != 1 or v in g.infinite_emitters:
            return False
    return True


# -- literals -----------------------------------------------------------

def parse_boundary(src: str, g: Graph) -> BoundaryPath:
    """Parse "e1 e2 . (e3 e4)^inf", "(c)^inf", "e1 e2 !" or "w !"."""
    s = src.strip()
    if s.endswith("!"):
        words = s[:-1].split()
        if not words:
            raise ExpressionError("empty finite boundary literal", 0)
        if len(words) == 1 and words[0] in g.out:
            return boundary_finite(g, g.vertex_path(words[0]))
        return boundary_finite(g, g.path(words))
    m = re.search(r"\(([^()]*)\)\s*\^inf\s*\Z", s)
    if not m:
        raise ExpressionError(
            "boundary literal must end with '!' or '(...)^inf'", 0)
    cycle_words = m.group(1).split()
    if not cycle_words:
        raise ExpressionError("empty cycle in boundary literal", m.start())
    head = s[:m.start()].split()
    if head and head[-1] == ".":
        head = head[:-1]
    cycle = g.path(cycle_words)
    if head:
        prefix = g.path(head)
    else:
        prefix = g.vertex_path(cycle.at)
    return boundary_periodic(g, prefix, cycle)


def format_boundary(x: BoundaryPath) -> str:
    if x.cycle is None:
        body = " ".join(x.prefix.edges) if x.prefix.edges else x.prefix.at
        return f"{body} !"
    tail = "(" + " ".join(x.cycle.edges) + ")^inf"
    if not x.prefix.edges:
        return tail
    return " ".join(x.prefix.edges) + " . " + tail
