"""Star-homomorphisms given by generator images.

A candidate map sends each vertex of the source graph to an element of the
target algebra and each edge likewise; the image of e^* is forced to be the
star of the image of e.  The map extends to a *-homomorphism exactly when
the images satisfy the defining relations, which validate_hom checks one
instance at a time.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, replace
from typing import Mapping

from .algebra import AlgebraElement, make_monomial, zero_element
from .errors import GraphFormatError, MismatchError, PreconditionError, TheoremViolationError
from .expressions import parse_expression
from .graphs import Graph, Path, parse_graph_file, path_key
from .rings import RINGS, StarRing


@dataclass(frozen=True)
class HomSpec:
    source: Graph
    target: Graph
    ring: StarRing
    vertex_images: dict[str, AlgebraElement]
    edge_images: dict[str, AlgebraElement]
    status: str = "unchecked"  # "unchecked" | "valid" | "invalid"
    failure: str | None = None


def hom_from(source: Graph, target: Graph, ring: StarRing,
             vertex_images: Mapping[str, AlgebraElement],
             edge_images: Mapping[str, AlgebraElement]) -> HomSpec:
    return HomSpec(source, target, ring, dict(vertex_images), dict(edge_images))


_HOM_FIELDS = {"source", "target", "ring", "vertex_images", "edge_images"}


def load_hom_spec(filename: str) -> HomSpec:
    """Read a hom-spec document; graph paths resolve relative to the file."""
    try:
        with open(filename, encoding="utf-8") as fh:
            raw = json.load(fh)
    except json.JSONDecodeError as ex:
        raise GraphFormatError(f"not valid JSON: {filename}: {ex}") from ex
    if not isinstance(raw, Mapping):
        raise GraphFormatError("hom-spec document must be a mapping")
    unknown = set(raw) - _HOM_FIELDS
    if unknown:
        raise GraphFormatError(f"unknown field: {sorted(unknown)[0]}")
    missing = _HOM_FIELDS - set(raw)
    if missing:
        raise GraphFormatError(f"missing field: {sorted(missing)[0]}")
    base = os.path.dirname(os.path.abspath(filename))
    source = parse_graph_file(os.path.join(base, raw["source"]))
    target = parse_graph_file(os.path.join(base, raw["target"]))
    ring = RINGS.get(raw["ring"])
    if ring is None:
        raise GraphFormatError(f"unknown ring: {raw['ring']}")
    for field in ("vertex_images", "edge_images"):
        if not isinstance(raw[field], Mapping):
            raise GraphFormatError(f"{field} must be a mapping of expressions")
    vimg = {v: parse_expression(expr, target, ring)
            for v, expr in raw["vertex_images"].items()}
    eimg = {e: parse_expression(expr, target, ring)
            for e, expr in raw["edge_images"].items()}
    return HomSpec(source, target, ring, vimg, eimg)


def validate_hom(h: HomSpec) -> HomSpec:
    """Check the generator images against every defining relation.

    Returns a copy stamped valid, or invalid with the first failing
    instance named, scanning in a fixed order so reports are stable.
    """
    failure = _first_failure(h)
    if failure is None:
        return replace(h, status="valid", failure=None)
    return replace(h, status="invalid", failure=failure)


def _first_failure(h: HomSpec) -> str | None:
    g = h.source
    zero = zero_element(h.target, h.ring)
    for v in sorted(g.vertices):
        if v not in h.vertex_images:
            return f"missing image for vertex {v}"
    for e in sorted(g.edge_map):
        if e not in h.edge_images:
            return f"missing image for edge {e}"
    for name, img in sorted(h.vertex_images.items()) + sorted(h.edge_images.items()):
        if img.graph != h.target or img.ring is not h.ring:
            raise MismatchError(f"image of {name} lives in the wrong algebra")

    verts = sorted(g.vertices)
    for v in verts:
        q = h.vertex_images[v]
        if q.star() != q:
            return f"vertex image not self-adjoint: {v}"
        if q * q != q:
            return f"vertex image not idempotent: {v}"
    for i, v in enumerate(verts):
        for w in verts[i + 1:]:
            if h.vertex_images[v] * h.vertex_images[w] != zero:
                return f"vertex images not orthogonal: {v} {w}"
            if h.vertex_images[w] * h.vertex_images[v] != zero:
                return f"vertex images not orthogonal: {w} {v}"

    edges = sorted(g.edge_map)
    for e in edges:
        te = h.edge_images[e]
        te_star = te.star()
        src_q = h.vertex_images[g.edge_src[e]]
        rng_q = h.vertex_images[g.edge_dst[e]]
        for f in edges:
            if f != e and te_star * h.edge_images[f] != zero:
                return f"(LP1) {e}^* {f} != 0"
        if te_star * te != rng_q:
            return f"(LP2) {e}^* {e} != r({e})"
        if src_q * te != te:
            return f"(LP3) s({e}) {e} != {e}"
        if te * rng_q != te:
            return f"(LP3) {e} r({e}) != {e}"
        if te_star * src_q != te_star:
            return f"(LP4) {e}^* s({e}) != {e}^*"
        if rng_q * te_star != te_star:
            return f"(LP4) r({e}) {e}^* != {e}^*"
    for v in verts:
        if not g.is_regular(v):
            continue
        total = zero
        for e in g.out[v]:
            te = h.edge_images[e]
            total = total + te * te.star()
        if total != h.vertex_images[v]:
            return f"(LP5) sum of e e^* over {v}E^1 != {v}"
    return None


def _image_of_path(h: HomSpec, p: Path) -> AlgebraElement:
    if p.is_vertex:
        return h.vertex_images[p.at]
    img = h.edge_images[p.edges[0]]
    for e in p.edges[1:]:
        img = img * h.edge_images[e]
    return img


def apply_hom(h: HomSpec, a: AlgebraElement) -> AlgebraElement:
    """Push a through the (validated) homomorphism, term by term."""
    if h.status != "valid":
        raise PreconditionError("apply_hom requires a validated hom")
    if a.graph != h.source or a.ring is not h.ring:
        raise MismatchError("element does not live over the hom's source")
    total = zero_element(h.target, h.ring)
    for m, c in a.terms.items():
        img = _image_of_path(h, m.mu) * _image_of_path(h, m.nu).star()
        total = total + img.scale(c)
    return total


@dataclass(frozen=True)
class PreservationReport:
    depth: int
    checked: int
    failures: tuple[tuple[Path, AlgebraElement], ...]


def check_diagonal_preservation(h: HomSpec, depth: int = 4) -> PreservationReport:
    """Check h(mu mu^*) stays diagonal for every |mu| <= depth.

    Over a kind ring a failure for a valid hom contradicts the projection
    classification, so it raises instead of reporting.
    """
    if h.status != "valid":
        raise PreconditionError("preservation check requires a validated hom")
    failures: list[tuple[Path, AlgebraElement]] = []
    checked = 0
    for n in range(depth + 1):
        for mu in h.source.paths(n):
            checked += 1
            image = apply_hom(h, make_monomial(h.source, h.ring, mu, mu))
            if not all(m.diagonal for m in image.terms):
                failures.append((mu, image))
    if failures and h.ring.kind:
        mu, image = failures[0]
        raise TheoremViolationError(
            f"valid hom over kind ring {h.ring.name} broke the diagonal "
            f"at {mu}: {image}")
    failures.sort(key=lambda it: path_key(it[0]))
    return PreservationReport(depth, checked, tuple(failures))
