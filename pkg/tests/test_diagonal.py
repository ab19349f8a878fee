from fractions import Fraction

import pytest

from leavitt import (DYADIC_RATIONALS, INTEGERS, Path, PreconditionError,
                     TheoremViolationError, diagonal_analyze, edge_element,
                     exchange_unitary, format_trace, graph_from,
                     is_projection, parse_expression, proof_trace,
                     vertex_element)
from leavitt.rings import StarRing, _check_dyadic, _conj_real

Z = INTEGERS


def test_is_projection(e2):
    v = vertex_element(e2, Z, "v")
    e1 = edge_element(e2, Z, "e1")
    assert is_projection(v)
    assert is_projection(e1 * e1.star())
    assert not is_projection(e1)
    assert not is_projection(v.scale(2))


def test_diagonal_membership(e2):
    e1 = edge_element(e2, Z, "e1")
    analysis = diagonal_analyze(e1 * e1.star())
    assert analysis.member
    assert analysis.decomposition.entries == (
        (Path((), "v"), 1), (Path(("e2",), "v"), -1))
    assert analysis.decomposition.element(e2, Z) == e1 * e1.star()
    # a non-projection off the diagonal: no verdict beyond membership
    off = diagonal_analyze(e1)
    assert not off.member and off.decomposition is None


def test_dyadic_projection_escapes_the_diagonal(e2):
    D = DYADIC_RATIONALS
    q = parse_expression("1/2 v + 1/2 e1 e2^* + 1/2 e2 e1^*", e2, D)
    assert is_projection(q)
    analysis = diagonal_analyze(q)
    assert not analysis.member
    coeff = {(m.mu.edges, m.nu.edges): c for m, c in q.terms.items()}
    assert coeff[(("e1",), ("e2",))] == Fraction(1, 2)


def test_fake_kind_flag_trips_the_violation_sentinel(e2):
    """A ring wrongly flagged kind turns the dyadic counterexample into a
    detected contradiction."""
    bogus = StarRing("bogus", True, _check_dyadic, _conj_real)
    q = parse_expression("1/2 v + 1/2 e1 e2^* + 1/2 e2 e1^*", e2, bogus)
    assert is_projection(q)
    with pytest.raises(TheoremViolationError):
        diagonal_analyze(q)
    with pytest.raises(TheoremViolationError):
        proof_trace(q, 1)


def test_trace_even_m(e2):
    e1 = edge_element(e2, Z, "e1")
    trace = proof_trace(e1 * e1.star(), 1)
    assert trace.verdict == "verified"
    assert [b.edges for b in trace.b_paths] == [("e1",)]
    (row,) = trace.rows
    assert row.m_beta == 0 and row.diag_coeff == 1 and row.excluded == ()
    assert trace.coefficients == {(Path(("e1",), "v"), Path(("e1",), "v")): 1}

    text = format_trace(trace)
    assert text.splitlines()[0] == "level: 1"
    assert text.splitlines()[-1] == "verdict: verified"
    assert "m=0" in text and "lambda=1" in text


def test_trace_vertex_at_higher_level(e2):
    v = vertex_element(e2, Z, "v")
    trace = proof_trace(v, 2)
    assert trace.verdict == "verified"
    assert len(trace.b_paths) == 4
    assert all(row.m_beta == 0 and row.diag_coeff == 1 for row in trace.rows)


def test_trace_odd_m():
    """A flagged loop keeps the vertex term unexpanded, so the level-1
    beta-set is a chain and the sign law needs m = 1."""
    g = graph_from(["v"], [("e2", "v", "v")], infinite_emitters=["v"])
    p = parse_expression("v - e2 e2^*", g, Z)
    assert is_projection(p)
    trace = proof_trace(p, 1)
    assert trace.verdict == "verified"
    assert [b.edges for b in trace.b_paths] == [(), ("e2",)]
    first, second = trace.rows
    assert first.m_beta == 0 and first.diag_coeff == 1
    assert first.excluded == ("e2",)
    assert second.m_beta == 1 and second.diag_coeff == -1
    assert second.excluded == ()


def test_trace_after_conjugation(e2):
    e1 = edge_element(e2, Z, "e1")
    u = exchange_unitary(e2, Z, e2.path(["e1"]), e2.path(["e2"]))
    assert u == u.star()
    assert is_projection(u * u)  # u^2 = 1 is a projection
    p = u * (e1 * e1.star()) * u
    assert p == edge_element(e2, Z, "e2") * edge_element(e2, Z, "e2").star()
    assert diagonal_analyze(p).member
    trace = proof_trace(p, 1)
    assert trace.verdict == "verified"


def test_trace_preconditions(e2):
    e1 = edge_element(e2, Z, "e1")
    with pytest.raises(PreconditionError):
        proof_trace(e1, 1)  # not a projection
    q = parse_expression("1/2 v + 1/2 e1 e2^* + 1/2 e2 e1^*",
                         e2, DYADIC_RATIONALS)
    with pytest.raises(PreconditionError):
        proof_trace(q, 1)  # ring not kind
    p = e1 * e1.star()
    with pytest.raises(PreconditionError):
        proof_trace(p, 0)  # level below a nu-leg
