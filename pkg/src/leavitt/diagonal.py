"""Projections and the diagonal subalgebra.

The diagonal D_R(E) is spanned by the monomials beta beta^*.  Over a kind
coefficient ring every projection (p = p^* = p^2) lies in the diagonal, and
its uniformized coefficients obey a sign law: lambda_(beta,beta) =
(-1)^(m_beta) with m_beta the number of strict prefixes of beta among the
appearing beta-legs, while all off-diagonal coefficients vanish.
proof_trace replays that argument instance by instance and cross-checks
every intermediate identity by direct computation; a mismatch means an
arithmetic bug, not bad input, and raises TheoremViolationError.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (AlgebraElement, make_monomial, path_element,
                      vertex_element, zero_element)
from .errors import PreconditionError, TheoremViolationError
from .graphs import Path, path_key, path_le
from .rings import Scalar


def is_projection(p: AlgebraElement) -> bool:
    """p == p^* and p == p^2, as term maps."""
    return p == p.star() and p == p * p


@dataclass(frozen=True)
class DiagonalDecomposition:
    entries: tuple[tuple[Path, Scalar], ...]

    def element(self, graph, ring) -> AlgebraElement:
        total = zero_element(graph, ring)
        for beta, c in self.entries:
            total = total + make_monomial(graph, ring, beta, beta).scale(c)
        return total


@dataclass(frozen=True)
class DiagonalAnalysis:
    member: bool
    decomposition: DiagonalDecomposition | None


def diagonal_analyze(p: AlgebraElement) -> DiagonalAnalysis:
    """Membership in the diagonal, read off the normal form.

    Over a kind ring a projection that fails membership contradicts the
    classification of projections and raises TheoremViolationError.
    """
    if all(m.diagonal for m in p.terms):
        entries = tuple(sorted(((m.mu, c) for m, c in p.terms.items()),
                               key=lambda it: path_key(it[0])))
        return DiagonalAnalysis(True, DiagonalDecomposition(entries))
    if p.ring.kind and is_projection(p):
        raise TheoremViolationError(
            "projection over kind ring "
            f"{p.ring.name} escaped the diagonal: {p}")
    return DiagonalAnalysis(False, None)


@dataclass(frozen=True)
class TraceRow:
    beta: Path
    m_beta: int
    excluded: tuple[str, ...]  # F_beta: continuation edges into longer betas
    diag_coeff: Scalar
    lhs_deg0: AlgebraElement  # degree-0 part of gamma^* p gamma
    rhs_deg0: AlgebraElement  # degree-0 part of gamma^* p^* p gamma


@dataclass(frozen=True)
class ProofTrace:
    level: int
    a_paths: tuple[Path, ...]
    b_paths: tuple[Path, ...]
    coefficients: dict[tuple[Path, Path], Scalar]
    rows: tuple[TraceRow, ...]
    verdict: str


def proof_trace(p: AlgebraElement, k: int) -> ProofTrace:
    """Replay the diagonal-membership argument for a projection p over a
    kind ring, uniformized at level k.

    Writes p = sum lambda_(alpha,beta) alpha beta^* with every beta of
    length k or shorter with singular range, then walks the beta-legs in
    canonical order (a linear extension of the prefix order) checking, for
    each beta with

        m_beta = #{beta' in B : beta' < beta}
        F_beta = {e : beta e <= beta' for some other beta' in B}
        gamma  = beta (r(beta) - sum_{e in F_beta} e e^*)

    that the sign law lambda_(beta,beta) = (-1)^m_beta holds, that the
    off-diagonal column vanishes, and that the degree-0 parts of
    gamma^* p gamma and gamma^* p^* p gamma both equal their closed forms

        (b)  (sum_{beta' <= beta} lambda_(beta',beta')) q
        (c)  (S~ S + S~ lambda + S conj(lambda) + sum_alpha |lambda_(alpha,beta)|^2) q

    with q = r(beta) - sum_{F_beta} e e^*, S = sum_{beta' < beta}
    lambda_(beta',beta') and S~ its conjugate.
    """
    ring, g = p.ring, p.graph
    if not ring.kind:
        raise PreconditionError(f"ring {ring.name} is not kind")
    if not is_projection(p):
        raise PreconditionError("trace requires a projection")
    triples = p.uniformize(k)

    lam: dict[tuple[Path, Path], Scalar] = {}
    by_beta: dict[Path, list[tuple[Path, Scalar]]] = {}
    for c, alpha, beta in triples:
        lam[(alpha, beta)] = c
        by_beta.setdefault(beta, []).append((alpha, c))
    b_paths = sorted(by_beta, key=path_key)
    b_set = set(b_paths)
    a_paths = sorted({alpha for _, alpha, _ in triples} | b_set, key=path_key)

    p_star_p = p.star() * p
    rows: list[TraceRow] = []
    for beta in b_paths:
        prefixes = [Path(beta.edges[:j], beta.at) for j in range(len(beta.edges))]
        below = [q for q in prefixes if q in b_set]
        m_beta = len(below)
        sign = ring.one if m_beta % 2 == 0 else -ring.one
        lam_bb = lam.get((beta, beta), ring.zero)
        if lam_bb != sign:
            raise TheoremViolationError(
                f"sign law failed at {beta}: lambda={lam_bb}, expected {sign}")
        for alpha, c in by_beta[beta]:
            if alpha != beta and c:
                raise TheoremViolationError(
                    f"off-diagonal coefficient survived at ({alpha}, {beta}): {c}")

        f_beta = tuple(sorted({
            other.edges[len(beta.edges)] for other in b_paths
            if len(other.edges) > len(beta.edges) and path_le(beta, other)
        }))
        q = vertex_element(g, ring, g.range_of(beta))
        for e in f_beta:
            ep = g.path([e])
            q = q - make_monomial(g, ring, ep, ep)
        gamma = path_element(g, ring, beta) * q
        gamma_star = gamma.star()
        lhs = (gamma_star * p * gamma).graded_component(0)
        rhs = (gamma_star * p_star_p * gamma).graded_component(0)

        s_plain = ring.zero
        for q_path in below:
            s_plain = s_plain + lam[(q_path, q_path)]
        s_conj = ring.conj(s_plain)
        formula_b = q.scale(s_plain + lam_bb)
        column = ring.zero
        for _, c in by_beta[beta]:
            column = column + ring.abs_sq(c)
        c_scalar = (s_conj * s_plain + s_conj * lam_bb
                    + s_plain * ring.conj(lam_bb) + column)
        formula_c = q.scale(c_scalar)

        if lhs != formula_b:
            raise TheoremViolationError(
                f"degree-0 of gamma^* p gamma at {beta} disagrees with its "
                f"closed form: {lhs} vs {formula_b}")
        if rhs != formula_c:
            raise TheoremViolationError(
                f"degree-0 of gamma^* p^* p gamma at {beta} disagrees with "
                f"its closed form: {rhs} vs {formula_c}")
        if lhs != rhs:
            raise TheoremViolationError(
                f"the two sides of the trace equation differ at {beta}")
        rows.append(TraceRow(beta, m_beta, f_beta, lam_bb, lhs, rhs))

    return ProofTrace(
        level=k,
        a_paths=tuple(a_paths),
        b_paths=tuple(b_paths),
        coefficients=lam,
        rows=tuple(rows),
        verdict="verified",
    )


def _path_str(p: Path) -> str:
    return " ".join(p.edges) if p.edges else p.at


def format_trace(trace: ProofTrace) -> str:
    from .rings import format_scalar
    lines = [f"level: {trace.level}",
             "B: " + (", ".join(_path_str(b) for b in trace.b_paths) or "(empty)")]
    for row in trace.rows:
        f_part = "{" + ", ".join(row.excluded) + "}"
        lines.append(
            f"beta={_path_str(row.beta)}  m={row.m_beta}  "
            f"lambda={format_scalar(row.diag_coeff)}  F={f_part}  deg0: agree")
    lines.append(f"verdict: {trace.verdict}")
    return "\n".join(lines)
