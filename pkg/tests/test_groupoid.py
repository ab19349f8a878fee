import pytest

from leavitt import (BoundaryPath, ExpressionError, GroupoidError,
                     NotComposableError, Path, PathError, PreconditionError,
                     boundary_finite, boundary_periodic, compose, cylinder,
                     cylinder_intersect, cylinder_membership, format_boundary,
                     inverse, is_isolated, isotropy, make_groupoid_element,
                     parse_boundary, shift, unit)
from leavitt.groupoid import edge_at, source_of


def per(g, prefix_edges, cycle_edges, prefix_at=None, cycle_at=None):
    prefix = (g.path(prefix_edges) if prefix_edges
              else g.vertex_path(prefix_at))
    cycle = g.path(cycle_edges)
    return boundary_periodic(g, prefix, cycle)


def test_canonicalization_absorbs_the_prefix(e2):
    # e1 . (e2 e1)^inf and (e1 e2)^inf describe the same point
    x = per(e2, ["e1"], ["e2", "e1"])
    y = per(e2, [], ["e1", "e2"], prefix_at="v")
    assert x == y
    assert format_boundary(x) == "(e1 e2)^inf"


def test_canonicalization_reduces_cycle_powers(loop):
    x = per(loop, [], ["c", "c", "c"], prefix_at="v")
    assert x.cycle.edges == ("c",)
    assert format_boundary(x) == "(c)^inf"


def test_minimal_prefix_stays(e2):
    x = per(e2, ["e1", "e2"], ["e2", "e1"])
    assert x.prefix.edges == ("e1", "e2")
    assert x.cycle.edges == ("e2", "e1")
    assert format_boundary(x) == "e1 e2 . (e2 e1)^inf"


def test_periodic_validation(e2, t3):
    with pytest.raises(PathError):
        boundary_periodic(t3, t3.vertex_path("u"), t3.path(["a"]))  # not a loop
    with pytest.raises(PathError):
        boundary_periodic(t3, t3.path(["c"]), t3.path(["b"]))  # prefix misses
    with pytest.raises(PathError):
        boundary_periodic(e2, e2.vertex_path("v"), e2.vertex_path("v"))


def test_finite_points(t3, ie):
    x = boundary_finite(t3, t3.path(["a", "b", "c"]))
    assert x.finite and format_boundary(x) == "a b c !"
    w = boundary_finite(t3, t3.vertex_path("w"))
    assert format_boundary(w) == "w !"
    with pytest.raises(PathError):
        boundary_finite(t3, t3.path(["a"]))  # ends at a regular vertex
    # a flagged emitter is a legal endpoint
    assert boundary_finite(ie, ie.vertex_path("v")).finite


def test_edge_at_and_source(e2, t3):
    x = per(e2, ["e1", "e2"], ["e2", "e1"])
    assert [edge_at(x, i) for i in range(6)] == \
        ["e1", "e2", "e2", "e1", "e2", "e1"]
    assert source_of(x) == "v"
    y = boundary_finite(t3, t3.path(["a", "c"]))
    assert [edge_at(y, i) for i in range(3)] == ["a", "c", None]


def test_shift(t3, e2):
    y = boundary_finite(t3, t3.path(["a", "b", "c"]))
    assert format_boundary(shift(t3, y, 1)) == "b c !"
    assert format_boundary(shift(t3, y, 3)) == "w !"
    with pytest.raises(PreconditionError):
        shift(t3, y, 4)
    with pytest.raises(PreconditionError):
        shift(t3, y, -1)

    x = per(e2, ["e1", "e1"], ["e2", "e1"])
    assert shift(e2, x, 1) == per(e2, ["e1"], ["e2", "e1"])
    assert shift(e2, x, 2) == per(e2, [], ["e2", "e1"], prefix_at="v")
    assert shift(e2, x, 3) == per(e2, [], ["e1", "e2"], prefix_at="v")
    assert shift(e2, x, 4) == shift(e2, x, 2)


def test_witness_search(loop, e2):
    x = per(loop, [], ["c"], prefix_at="v")
    gel = make_groupoid_element(loop, x, 1, x)
    assert gel.witness == (1, 0)
    assert make_groupoid_element(loop, x, 0, x).witness == (0, 0)
    assert make_groupoid_element(loop, x, -2, x).witness == (0, 2)

    y = per(e2, [], ["e1", "e2"], prefix_at="v")
    assert make_groupoid_element(e2, y, 2, y).witness == (2, 0)
    with pytest.raises(GroupoidError):
        make_groupoid_element(e2, y, 1, y)  # odd shift never matches


def test_witness_between_distinct_points(e2):
    x = per(e2, ["e2"], ["e1", "e2"])
    y = shift(e2, x, 1)
    gel = make_groupoid_element(e2, x, 1, y)
    assert gel.witness == (1, 0)
    assert inverse(gel).k == -1 and inverse(gel).witness == (0, 1)


def test_finite_witness(t3):
    x = boundary_finite(t3, t3.path(["a", "b", "c"]))
    y = shift(t3, x, 2)
    gel = make_groupoid_element(t3, x, 2, y)
    assert gel.witness == (2, 0)
    with pytest.raises(GroupoidError):
        make_groupoid_element(t3, x, 0, y)


def test_compose_and_units(loop):
    x = per(loop, [], ["c"], prefix_at="v")
    g1 = make_groupoid_element(loop, x, 1, x)
    g2 = make_groupoid_element(loop, x, 2, x)
    assert compose(loop, g1, g2).k == 3
    assert compose(loop, g1, inverse(g1)) == unit(x)
    assert compose(loop, g1, unit(x)) == g1
    assert compose(loop, unit(x), g1) == g1


def test_compose_rejects_mismatched_endpoints(e2):
    x = per(e2, [], ["e1"], prefix_at="v")
    y = per(e2, [], ["e2"], prefix_at="v")
    gx = unit(x)
    gy = unit(y)
    with pytest.raises(NotComposableError):
        compose(e2, gx, gy)


def test_equality_ignores_witness(loop):
    x = per(loop, [], ["c"], prefix_at="v")
    a = make_groupoid_element(loop, x, 0, x)
    assert a == unit(x)
    assert a.witness == (0, 0)


def test_isotropy(loop, e2, t3):
    assert isotropy(per(loop, [], ["c"], prefix_at="v")) == 1
    assert isotropy(per(e2, [], ["e1", "e2"], prefix_at="v")) == 2
    assert isotropy(per(e2, ["e1"], ["e2", "e2"], prefix_at=None)) == 1
    assert isotropy(boundary_finite(t3, t3.vertex_path("w"))) == 0


def test_isotropy_is_shift_invariant(e2):
    x = per(e2, ["e1", "e1", "e2"], ["e1", "e2"], prefix_at=None)
    for n in range(6):
        assert isotropy(shift(e2, x, n)) == isotropy(x)


def test_is_isolated(t3, loop, e2, ie):
    assert is_isolated(t3, boundary_finite(t3, t3.path(["a", "b", "c"])))
    assert is_isolated(loop, per(loop, [], ["c"], prefix_at="v"))
    assert not is_isolated(t3, per(t3, ["a"], ["b"]))  # b has the exit c
    assert not is_isolated(e2, per(e2, [], ["e1", "e2"], prefix_at="v"))
    # flagged vertices always have unlisted neighbours nearby
    assert not is_isolated(ie, boundary_finite(ie, ie.vertex_path("v")))
    assert not is_isolated(ie, per(ie, [], ["e1"], prefix_at="v"))
    assert is_isolated(ie, boundary_finite(ie, ie.path(["e2"])))


def test_cylinders(e2):
    z1 = cylinder(e2, e2.path(["e1"]))
    x = per(e2, [], ["e1", "e2"], prefix_at="v")
    y = per(e2, [], ["e2", "e1"], prefix_at="v")
    assert cylinder_membership(e2, z1, x)
    assert not cylinder_membership(e2, z1, y)

    guard = cylinder(e2, e2.vertex_path("v"), excluded={"e1"})
    assert not cylinder_membership(e2, guard, x)
    assert cylinder_membership(e2, guard, y)

    with pytest.raises(PathError):
        cylinder(e2, e2.path(["e1"]), excluded={"nope"})


def test_cylinder_membership_finite(t3):
    z = cylinder(t3, t3.path(["a", "b"]))
    deep = boundary_finite(t3, t3.path(["a", "b", "b", "c"]))
    short = boundary_finite(t3, t3.vertex_path("w"))
    assert cylinder_membership(t3, z, deep)
    assert not cylinder_membership(t3, z, short)
    # the point through a b c with c excluded afterwards
    z2 = cylinder(t3, t3.path(["a", "b"]), excluded={"c"})
    assert not cylinder_membership(t3, z2, boundary_finite(t3, t3.path(["a", "b", "c"])))
    assert cylinder_membership(t3, z2, boundary_finite(t3, t3.path(["a", "b", "b", "c"])))
    # a finite point that ends exactly at the base is a member
    exact = boundary_finite(t3, t3.path(["a", "b", "c"]))
    z3 = cylinder(t3, t3.path(["a", "b", "c"]), excluded=())
    assert cylinder_membership(t3, z3, exact)


def test_cylinder_intersections(e2):
    za = cylinder(e2, e2.path(["e1"]))
    zb = cylinder(e2, e2.path(["e1", "e2"]))
    zc = cylinder(e2, e2.path(["e2"]))
    assert cylinder_intersect(e2, za, zb) == zb
    assert cylinder_intersect(e2, zb, za) == zb
    assert cylinder_intersect(e2, za, zc) is None

    guard = cylinder(e2, e2.vertex_path("v"), excluded={"e1"})
    assert cylinder_intersect(e2, guard, za) is None
    assert cylinder_intersect(e2, guard, zc) == zc

    g1 = cylinder(e2, e2.path(["e1"]), excluded={"e1"})
    g2 = cylinder(e2, e2.path(["e1"]), excluded={"e2"})
    both = cylinder_intersect(e2, g1, g2)
    assert both.mu == e2.path(["e1"]) and both.excluded == {"e1", "e2"}


def test_boundary_literals(e2, t3, loop):
    assert parse_boundary("(c)^inf", loop) == per(loop, [], ["c"],
                                                  prefix_at="v")
    assert parse_boundary("e1 e2 . (e2 e1)^inf", e2) == \
        per(e2, ["e1", "e2"], ["e2", "e1"])
    # absorption applies to literals too
    assert format_boundary(parse_boundary("e1 . (e2 e1)^inf", e2)) == \
        "(e1 e2)^inf"
    assert parse_boundary("a b c !", t3) == \
        boundary_finite(t3, t3.path(["a", "b", "c"]))
    assert parse_boundary("w !", t3) == boundary_finite(t3, t3.vertex_path("w"))

    with pytest.raises(ExpressionError):
        parse_boundary("e1 e2", e2)
    with pytest.raises(ExpressionError):
        parse_boundary("()^inf", e2)
    with pytest.raises(ExpressionError):
        parse_boundary("!", t3)
    with pytest.raises(PathError):
        parse_boundary("(a)^inf", t3)
    with pytest.raises(PathError):
        parse_boundary("x !", t3)


def test_boundary_round_trip(e2, t3):
    points = [
        per(e2, [], ["e1"], prefix_at="v"),
        per(e2, ["e2", "e2"], ["e1", "e2"]),
        boundary_finite(t3, t3.path(["a", "b", "b", "c"])),
        boundary_finite(t3, t3.vertex_path("w")),
    ]
    for x in points:
        g = e2 if x.prefix.at == "v" and x.cycle is not None else t3
        assert parse_boundary(format_boundary(x), g) == x
