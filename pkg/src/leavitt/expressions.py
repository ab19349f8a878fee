"""Parser for the element expression language.

    expr  := term (("+" | "-") term)*
    term  := [coeff "·"?] atom+
    atom  := ident ["^*"]
    coeff := integer | rational a/b | gaussian a+bi

Words are whitespace-separated; "·" binds a coefficient to the first atom
of its term ("2·v").  An identifier resolves against the active graph
(vertices and edges), and graph names win over the Gaussian literal "i".
Juxtaposed atoms multiply, so "e1 f2^* f1^*" denotes e1 (f1 f2)^*.  U+2212
is accepted as a minus sign; canonical output uses ASCII "-".
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .algebra import AlgebraElement, Monomial, zero_element
from .errors import ExpressionError, UnknownSymbolError
from .graphs import Graph, Path
from .rings import Scalar, StarRing, looks_like_scalar, parse_scalar

_SIGNS = {"+": 1, "-": -1, "−": -1}
_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class _Token:
    kind: str  # "sign" | "coeff" | "dot" | "atom"
    text: str
    pos: int
    starred: bool = False


def _tokenize(src: str, graph: Graph) -> list[_Token]:
    tokens: list[_Token] = []
    for m in re.finditer(r"\S+", src):
        word, pos = m.group(), m.start()
        if word in _SIGNS:
            tokens.append(_Token("sign", word, pos))
            continue
        if "·" in word:
            head, _, tail = word.partition("·")
            if "·" in tail:
                raise ExpressionError("more than one '·' in a word", pos)
            if head:
                tokens.append(_classify(head, pos, graph, coeff_only=True))
            tokens.append(_Token("dot", "·", pos + len(head)))
            if tail:
                tokens.append(_classify(tail, pos + len(head) + 1, graph))
            continue
        tokens.append(_classify(word, pos, graph))
    return tokens


def _classify(word: str, pos: int, graph: Graph, coeff_only: bool = False) -> _Token:
    starred = word.endswith("^*")
    name = word[:-2] if starred else word
    is_ident = bool(_IDENT_RE.match(name))
    known = is_ident and (name in graph.edge_map or name in graph.out)
    if known and not coeff_only:
        return _Token("atom", name, pos, starred)
    if not starred and looks_like_scalar(word):
        return _Token("coeff", word, pos)
    if coeff_only:
        raise ExpressionError(f"expected a coefficient, got {word!r}", pos)
    if is_ident:
        raise UnknownSymbolError(f"unknown identifier {word!r} at position {pos}")
    raise ExpressionError(f"cannot read {word!r}", pos)


def _atom_element(graph: Graph, ring: StarRing, tok: _Token) -> AlgebraElement:
    if tok.text in graph.edge_map:
        e = graph.edge_map[tok.text]
        leg = Path((tok.text,), e.src)
        spot = Path((), e.dst)
        mono = Monomial(spot, leg) if tok.starred else Monomial(leg, spot)
        return AlgebraElement(graph, ring, {mono: ring.one})
    p = Path((), tok.text)
    return AlgebraElement(graph, ring, {Monomial(p, p): ring.one})


def parse_expression(src: str, graph: Graph, ring: StarRing) -> AlgebraElement:
    """Parse src into a normal-form element over (graph, ring)."""
    tokens = _tokenize(src, graph)
    if not tokens:
        raise ExpressionError("empty expression", 0)
    result = zero_element(graph, ring)
    i = 0
    first = True
    while i < len(tokens):
        sign = 1
        if tokens[i].kind == "sign":
            sign = _SIGNS[tokens[i].text]
            i += 1
        elif not first:
            raise ExpressionError(
                f"expected '+' or '-' before {tokens[i].text!r}", tokens[i].pos)
        if i >= len(tokens):
            raise ExpressionError("dangling sign", tokens[-1].pos)
        coeff: Scalar = ring.one
        if tokens[i].kind == "coeff":
            coeff = parse_scalar(ring, tokens[i].text)
            i += 1
            if i < len(tokens) and tokens[i].kind == "dot":
                i += 1
        elif tokens[i].kind == "dot":
            raise ExpressionError("'·' without a coefficient", tokens[i].pos)
        if i >= len(tokens) or tokens[i].kind != "atom":
            where = tokens[i] if i < len(tokens) else tokens[-1]
            raise ExpressionError("expected a generator after the coefficient",
                                  where.pos)
        term = _atom_element(graph, ring, tokens[i])
        i += 1
        while i < len(tokens) and tokens[i].kind == "atom":
            term = term * _atom_element(graph, ring, tokens[i])
            i += 1
        if i < len(tokens) and tokens[i].kind in ("coeff", "dot"):
            raise ExpressionError(
                f"coefficient {tokens[i].text!r} must start a term; "
                "separate terms with '+' or '-'", tokens[i].pos)
        result = result + term.scale(-coeff if sign < 0 else coeff)
        first = False
    return result
