"""Leavitt path algebra elements in normal form.

An element of L_R(E) is an R-linear combination of monomials mu nu^* where
mu, nu are finite paths with a common range.  The spanning set is cut down
to a basis by one orientation of the relation v = sum_{e in vE^1} e e^*:
for each regular vertex the lexicographically least out-edge is *special*,
and a monomial in which both legs end with that same special edge is
rewritten

    mu'e (nu'e)^*  ->  mu' nu'^*  -  sum_{f != e} (mu'f)(nu'f)^*.

Each rewrite either shortens the legs or moves the final edge off the
special one, so the process terminates; it applies at a unique position, so
the result is confluent.  Elements are sparse term maps over the surviving
monomials and equality is term-map identity.  No rewriting happens at
singular vertices, where the relation does not hold.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import MismatchError, PathError, PreconditionError
from .graphs import Graph, Path, path_key
from .rings import Scalar, StarRing, format_scalar, is_display_negative


@dataclass(frozen=True)
class Monomial:
    mu: Path
    nu: Path

    @property
    def degree(self) -> int:
        return len(self.mu.edges) - len(self.nu.edges)

    @property
    def diagonal(self) -> bool:
        return self.mu == self.nu


def monomial_key(m: Monomial):
    return path_key(m.mu) + path_key(m.nu)


def _reduce(graph: Graph, items: Iterable[tuple[Monomial, Scalar]]) -> dict[Monomial, Scalar]:
    """Rewrite arbitrary terms into the normal-form basis and combine."""
    out: dict[Monomial, Scalar] = {}
    special = graph.special_edge
    src = graph.edge_src
    stack = list(items)
    while stack:
        mon, c = stack.pop()
        if not c:
            continue
        mu, nu = mon.mu, mon.nu
        if mu.edges and nu.edges and mu.edges[-1] == nu.edges[-1]:
            e = mu.edges[-1]
            v = src[e]
            if special.get(v) == e:
                mu2 = Path(mu.edges[:-1], mu.at)
                nu2 = Path(nu.edges[:-1], nu.at)
                stack.append((Monomial(mu2, nu2), c))
                for f in graph.out[v]:
                    if f != e:
                        stack.append((Monomial(Path(mu2.edges + (f,), mu2.at),
                                               Path(nu2.edges + (f,), nu2.at)), -c))
                continue
        acc = out.get(mon)
        if acc is None:
            out[mon] = c
        else:
            acc = acc + c
            if acc:
                out[mon] = acc
            else:
                del out[mon]
    return out


def _mono_mul(left: Monomial, right: Monomial) -> Monomial | None:
    """(alpha beta^*)(gamma delta^*): None when the inner product vanishes."""
    beta, gamma = left.nu, right.mu
    if beta.at != gamma.at:
        return None
    nb, ng = len(beta.edges), len(gamma.edges)
    if nb <= ng:
        if gamma.edges[:nb] != beta.edges:
            return None
        alpha = left.mu
        if nb == ng:
            return Monomial(alpha, right.nu)
        rest = gamma.edges[nb:]
        return Monomial(Path(alpha.edges + rest, alpha.at), right.nu)
    if beta.edges[:ng] != gamma.edges:
        return None
    rest = beta.edges[ng:]
    delta = right.nu
    return Monomial(left.mu, Path(delta.edges + rest, delta.at))


class AlgebraElement:
    """A normal-form element bound to one (graph, ring) pair."""

    __slots__ = ("graph", "ring", "terms")

    def __init__(self, graph: Graph, ring: StarRing, terms: dict[Monomial, Scalar]):
        self.graph = graph
        self.ring = ring
        self.terms = terms

    # -- plumbing ------------------------------------------------------

    def _compat(self, other: "AlgebraElement"):
        if self.graph != other.graph:
            raise MismatchError("elements bound to different graphs")
        if self.ring is not other.ring:
            raise MismatchError(
                f"elements bound to different rings: {self.ring.name} vs {other.ring.name}")

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._compat(other)
        return self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"<{format_element(self)}>"

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._compat(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            acc = terms.get(m)
            if acc is None:
                terms[m] = c
            else:
                acc = acc + c
                if acc:
                    terms[m] = acc
                else:
                    del terms[m]
        return AlgebraElement(self.graph, self.ring, terms)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.graph, self.ring,
                              {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def scale(self, scalar) -> "AlgebraElement":
        c0 = self.ring.check(scalar)
        if not c0:
            return AlgebraElement(self.graph, self.ring, {})
        return AlgebraElement(self.graph, self.ring,
                              {m: c0 * c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._compat(other)
            items = []
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    prod = _mono_mul(m1, m2)
                    if prod is not None:
                        items.append((prod, c1 * c2))
            return AlgebraElement(self.graph, self.ring, _reduce(self.graph, items))
        return self.scale(other)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def star(self) -> "AlgebraElement":
        """The involution: lambda mu nu^*  ->  conj(lambda) nu mu^*."""
        conj = self.ring.conj
        items = [(Monomial(m.nu, m.mu), conj(c)) for m, c in self.terms.items()]
        return AlgebraElement(self.graph, self.ring, _reduce(self.graph, items))

    # -- structure -----------------------------------------------------

    def graded_component(self, n: int) -> "AlgebraElement":
        """The degree-n part under deg(mu nu^*) = |mu| - |nu|."""
        return AlgebraElement(self.graph, self.ring,
                              {m: c for m, c in self.terms.items() if m.degree == n})

    def degrees(self) -> list[int]:
        return sorted({m.degree for m in self.terms})

    def uniformize(self, k: int) -> list[tuple[Scalar, Path, Path]]:
        """Rewrite as sum lambda_(alpha,beta) alpha beta^* where every beta
        either has length k or is shorter with singular range.

        Repeatedly replaces alpha beta^* by sum_e (alpha e)(beta e)^* over
        the out-edges of the common range; expansion stops at level k and at
        singular vertices, so it never runs through an infinite emitter.
        Duplicate (alpha, beta) keys are combined and zeros dropped.
        """
        if k < 0 or any(len(m.nu.edges) > k for m in self.terms):
            raise PreconditionError(
                f"uniformization level {k} below a nu-leg length")
        g = self.graph
        table: dict[tuple[Path, Path], Scalar] = {}
        stack = [(m.mu, m.nu, c) for m, c in self.terms.items()]
        while stack:
            mu, nu, c = stack.pop()
            v = g.range_of(nu)
            if len(nu.edges) == k or v in g.singular_vertices:
                key = (mu, nu)
                acc = table.get(key)
                acc = c if acc is None else acc + c
                if acc:
                    table[key] = acc
                else:
                    table.pop(key, None)
            else:
                for e in g.out[v]:
                    stack.append((Path(mu.edges + (e,), mu.at),
                                  Path(nu.edges + (e,), nu.at), c))
        triples = [(c, mu, nu) for (mu, nu), c in table.items()]
        triples.sort(key=lambda t: path_key(t[2]) + path_key(t[1]))
        return triples


# -- factories ---------------------------------------------------------

def zero_element(graph: Graph, ring: StarRing) -> AlgebraElement:
    return AlgebraElement(graph, ring, {})


def vertex_element(graph: Graph, ring: StarRing, v: str) -> AlgebraElement:
    p = graph.vertex_path(v)
    return AlgebraElement(graph, ring, {Monomial(p, p): ring.one})


def edge_element(graph: Graph, ring: StarRing, e: str) -> AlgebraElement:
    return make_monomial(graph, ring, graph.path([e]),
                         graph.vertex_path(graph.edge_dst[e]))


def unit_element(graph: Graph, ring: StarRing) -> AlgebraElement:
    """The sum of all vertex idempotents (the unit; the graph is finite)."""
    terms = {}
    for v in graph.vertices:
        p = Path((), v)
        terms[Monomial(p, p)] = ring.one
    return AlgebraElement(graph, ring, terms)


def make_monomial(graph: Graph, ring: StarRing, mu: Path, nu: Path) -> AlgebraElement:
    """The element mu nu^*, normalized."""
    mu = graph.check_path(mu)
    nu = graph.check_path(nu)
    if graph.range_of(mu) != graph.range_of(nu):
        raise PathError(
            f"legs have different ranges: {graph.range_of(mu)} != {graph.range_of(nu)}")
    return AlgebraElement(graph, ring, _reduce(graph, [(Monomial(mu, nu), ring.one)]))


def path_element(graph: Graph, ring: StarRing, p: Path) -> AlgebraElement:
    return make_monomial(graph, ring, p, graph.vertex_path(graph.range_of(p)))


def from_terms(graph: Graph, ring: StarRing,
               items: Iterable[tuple[Path, Path, Scalar]]) -> AlgebraElement:
    """Sum of lambda mu nu^* over (mu, nu, lambda) triples, normalized."""
    checked = []
    for mu, nu, c in items:
        mu = graph.check_path(mu)
        nu = graph.check_path(nu)
        if graph.range_of(mu) != graph.range_of(nu):
            raise PathError(
                f"legs have different ranges: {graph.range_of(mu)} != {graph.range_of(nu)}")
        checked.append((Monomial(mu, nu), ring.check(c)))
    return AlgebraElement(graph, ring, _reduce(graph, checked))


# -- canonical serialization -------------------------------------------

def _format_monomial(m: Monomial) -> str:
    pieces = list(m.mu.edges)
    pieces.extend(f"{e}^*" for e in reversed(m.nu.edges))
    if not pieces:
        return m.mu.at
    return " ".join(pieces)


def format_element(a: AlgebraElement) -> str:
    """Canonical one-line form, e.g. "1·v - 1·e2 e2^*"; parses back exactly."""
    if not a.terms:
        return "0"
    chunks: list[str] = []
    for m in sorted(a.terms, key=monomial_key):
        c = a.terms[m]
        if not chunks:
            # the scalar literal carries its own sign ("-1", "-1+2i")
            chunks.append(f"{format_scalar(c)}·{_format_monomial(m)}")
        else:
            neg = is_display_negative(c)
            body = f"{format_scalar(-c if neg else c)}·{_format_monomial(m)}"
            chunks.append(("- " if neg else "+ ") + body)
    return " ".join(chunks)
