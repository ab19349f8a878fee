"""Seeded random generators for elements, projections and boundary points.

Everything takes an explicit random.Random so runs reproduce exactly.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

from .algebra import (AlgebraElement, from_terms, make_monomial, unit_element,
                      zero_element)
from .errors import PreconditionError
from .graphs import Graph, Path, path_le
from .groupoid import BoundaryPath, boundary_periodic
from .rings import StarRing


@lru_cache(maxsize=None)
def paths_up_to(g: Graph, max_len: int) -> tuple[Path, ...]:
    out: list[Path] = []
    for n in range(max_len + 1):
        out.extend(g.paths(n))
    return tuple(out)


@lru_cache(maxsize=None)
def _paths_by_range(g: Graph, max_len: int) -> dict[str, tuple[Path, ...]]:
    buckets: dict[str, list[Path]] = {v: [] for v in g.vertices}
    for p in paths_up_to(g, max_len):
        buckets[g.range_of(p)].append(p)
    return {v: tuple(ps) for v, ps in buckets.items()}


def random_element(rng: random.Random, g: Graph, ring: StarRing,
                   max_terms: int = 3, max_len: int = 3,
                   lo: int = -3, hi: int = 3) -> AlgebraElement:
    """Up to max_terms random monomials with small integer coefficients."""
    by_range = _paths_by_range(g, max_len)
    pool = paths_up_to(g, max_len)
    items = []
    for _ in range(rng.randint(1, max_terms)):
        mu = rng.choice(pool)
        candidates = by_range[g.range_of(mu)]
        nu = rng.choice(candidates)
        c = 0
        while c == 0:
            c = rng.randint(lo, hi)
        items.append((mu, nu, c))
    return from_terms(g, ring, items)


def random_homogeneous(rng: random.Random, g: Graph, ring: StarRing,
                       degree: int, max_terms: int = 3, max_len: int = 3,
                       lo: int = -3, hi: int = 3) -> AlgebraElement:
    """A random element all of whose monomials have the given degree."""
    by_range = _paths_by_range(g, max_len)
    pool = [p for p in paths_up_to(g, max_len)
            if 0 <= len(p.edges) - degree <= max_len]
    items = []
    for _ in range(rng.randint(1, max_terms)):
        for _ in range(64):
            mu = rng.choice(pool)
            nus = [q for q in by_range[g.range_of(mu)]
                   if len(q.edges) == len(mu.edges) - degree]
            if nus:
                c = 0
                while c == 0:
                    c = rng.randint(lo, hi)
                items.append((mu, rng.choice(nus), c))
                break
    if not items:
        raise PreconditionError(f"graph admits no monomials of degree {degree}")
    return from_terms(g, ring, items)


def random_antichain(rng: random.Random, g: Graph, max_len: int = 3,
                     max_size: int = 3) -> list[Path]:
    """Pairwise prefix-incomparable paths (so the beta beta^* are orthogonal)."""
    pool = list(paths_up_to(g, max_len))
    rng.shuffle(pool)
    chosen: list[Path] = []
    for p in pool:
        if len(chosen) == max_size:
            break
        if all(not path_le(p, q) and not path_le(q, p) for q in chosen):
            chosen.append(p)
    return chosen


def diagonal_projection(g: Graph, ring: StarRing, paths) -> AlgebraElement:
    total = zero_element(g, ring)
    for beta in paths:
        total = total + make_monomial(g, ring, beta, beta)
    return total


@lru_cache(maxsize=None)
def exchange_pairs(g: Graph, max_len: int = 3, max_gap: int = 1) -> tuple[tuple[Path, Path], ...]:
    """Incomparable same-source same-range path pairs, for exchange
    unitaries.  max_gap caps the length difference, which caps how fast the
    conjugated projections deepen."""
    pool = [p for p in paths_up_to(g, max_len) if p.edges]
    pairs = []
    for p, q in combinations(pool, 2):
        if p.at != q.at or g.range_of(p) != g.range_of(q):
            continue
        if abs(len(p.edges) - len(q.edges)) > max_gap:
            continue
        if path_le(p, q) or path_le(q, p):
            continue
        pairs.append((p, q))
    return tuple(pairs)


def exchange_unitary(g: Graph, ring: StarRing, mu: Path, nu: Path) -> AlgebraElement:
    """u = mu nu^* + nu mu^* + (1 - mu mu^* - nu nu^*): self-adjoint with
    u^2 = 1, so p -> u p u preserves projections."""
    if path_le(mu, nu) or path_le(nu, mu):
        raise PreconditionError("exchange legs must be incomparable")
    u = make_monomial(g, ring, mu, nu) + make_monomial(g, ring, nu, mu)
    u = u + unit_element(g, ring)
    u = u - make_monomial(g, ring, mu, mu) - make_monomial(g, ring, nu, nu)
    return u


def random_projection_steps(rng: random.Random, g: Graph, ring: StarRing,
                            max_conjugations: int = 3, max_len: int = 3) -> list[AlgebraElement]:
    """A diagonal projection followed by its exchange-unitary conjugates."""
    base = random_antichain(rng, g, max_len)
    steps = [diagonal_projection(g, ring, base)]
    pairs = exchange_pairs(g, max_len)
    if pairs:
        for _ in range(rng.randint(0, max_conjugations)):
            mu, nu = pairs[rng.randrange(len(pairs))]
            u = exchange_unitary(g, ring, mu, nu)
            steps.append(u * steps[-1] * u)
    return steps


def random_boundary_point(rng: random.Random, g: Graph,
                          max_prefix: int = 3, max_cycle: int = 3) -> BoundaryPath:
    """A random eventually periodic point: random loop, random run-in."""
    loops = [p for p in paths_up_to(g, max_cycle)
             if p.edges and g.range_of(p) == p.at]
    if not loops:
        raise PreconditionError("graph has no cycles")
    cycle = rng.choice(loops)
    into = [p for p in paths_up_to(g, max_prefix) if g.range_of(p) == cycle.at]
    prefix = rng.choice(into) if into else Path((), cycle.at)
    return boundary_periodic(g, prefix, cycle)
