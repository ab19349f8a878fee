"""Command-line interface.

Exit codes: 0 success or affirmative, 1 mathematically negative result,
2 usage or syntax error, 3 semantic input error, 4 theorem violation
(an internal-contradiction sentinel).
"""

from __future__ import annotations

import argparse
import sys

from .algebra import format_element
from .diagonal import diagonal_analyze, format_trace, is_projection, proof_trace
from .errors import (CoefficientError, ExpressionError, GraphFormatError,
                     GroupoidError, MismatchError, NotComposableError,
                     PathError, PreconditionError, TheoremViolationError,
                     UnknownSymbolError)
from .expressions import parse_expression
from .graphs import condition_l, parse_graph_file
from .groupoid import (compose, format_boundary, inverse, is_isolated,
                       isotropy, make_groupoid_element, parse_boundary, shift)
from .homs import check_diagonal_preservation, load_hom_spec, validate_hom
from .rings import RINGS, format_scalar, kind_instance_check, parse_scalar


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="leavitt", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def with_graph(name, **kw):
        p = sub.add_parser(name, **kw)
        p.add_argument("--graph", required=True, help="graph file (JSON)")
        p.add_argument("--ring", default="Z", choices=sorted(RINGS))
        return p

    p = with_graph("normalize", help="normal form of an expression")
    p.add_argument("expr")
    p = with_graph("mul", help="product of two expressions")
    p.add_argument("left")
    p.add_argument("right")
    p = with_graph("star", help="the involution")
    p.add_argument("expr")
    p = with_graph("grade", help="one graded component")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("expr")
    p = with_graph("proj-check", help="is the element a projection?")
    p.add_argument("expr")
    p = with_graph("diag", help="diagonal membership and decomposition")
    p.add_argument("expr")
    p = with_graph("trace", help="replay the diagonal-projection argument")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("expr")

    p = sub.add_parser("hom-check", help="validate a hom spec and check diagonal preservation")
    p.add_argument("--spec", required=True)
    p.add_argument("--depth", type=int, default=4)

    p = sub.add_parser("kind-check", help="one instance of the kindness property")
    p.add_argument("--ring", required=True, choices=sorted(RINGS))
    p.add_argument("--tuple", required=True, dest="values",
                   help="comma-separated scalars, lambda_0 first")

    p = with_graph("condition-l", help="does every cycle have an exit?")

    p = with_graph("boundary", help="boundary path operations")
    p.add_argument("action", choices=["canonicalize", "shift", "isolated", "isotropy"])
    p.add_argument("--point", required=True)
    p.add_argument("-n", type=int, default=1)

    p = with_graph("gpd", help="graph groupoid elements")
    p.add_argument("action", choices=["make", "inverse", "compose"])
    p.add_argument("--x", required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--x2")
    p.add_argument("-k2", type=int)
    p.add_argument("--y2")
    return parser


def _context(args):
    return parse_graph_file(args.graph), RINGS[args.ring]


def _format_gel(gel) -> str:
    m, n = gel.witness
    return (f"{format_boundary(gel.x)} ; {gel.k} ; {format_boundary(gel.y)}"
            f" ; witness=({m},{n})")


def _dispatch(args) -> tuple[int, str]:
    cmd = args.command
    if cmd == "normalize":
        g, ring = _context(args)
        return 0, format_element(parse_expression(args.expr, g, ring))
    if cmd == "mul":
        g, ring = _context(args)
        a = parse_expression(args.left, g, ring)
        b = parse_expression(args.right, g, ring)
        return 0, format_element(a * b)
    if cmd == "star":
        g, ring = _context(args)
        return 0, format_element(parse_expression(args.expr, g, ring).star())
    if cmd == "grade":
        g, ring = _context(args)
        a = parse_expression(args.expr, g, ring)
        return 0, format_element(a.graded_component(args.n))
    if cmd == "proj-check":
        g, ring = _context(args)
        p = parse_expression(args.expr, g, ring)
        if p != p.star():
            return 1, "false: p ≠ p^*"
        if p != p * p:
            return 1, "false: p ≠ p^2"
        return 0, "true"
    if cmd == "diag":
        g, ring = _context(args)
        p = parse_expression(args.expr, g, ring)
        analysis = diagonal_analyze(p)
        if analysis.member:
            return 0, "member: true\n" + format_element(p)
        return 1, "member: false"
    if cmd == "trace":
        g, ring = _context(args)
        p = parse_expression(args.expr, g, ring)
        return 0, format_trace(proof_trace(p, args.k))
    if cmd == "hom-check":
        h = validate_hom(load_hom_spec(args.spec))
        if h.status != "valid":
            return 1, f"invalid: {h.failure}"
        report = check_diagonal_preservation(h, args.depth)
        lines = ["valid",
                 f"diagonal preservation: checked {report.checked} generators "
                 f"to depth {report.depth}, failures {len(report.failures)}"]
        for mu, image in report.failures:
            lines.append(f"  {' '.join(mu.edges) or mu.at}: {format_element(image)}")
        return (0 if not report.failures else 1), "\n".join(lines)
    if cmd == "kind-check":
        ring = RINGS[args.ring]
        words = [w.strip() for w in args.values.split(",")]
        if not all(words):
            raise ExpressionError("empty entry in tuple", 0)
        values = [parse_scalar(ring, w) for w in words]
        verdict = kind_instance_check(ring, values)
        if verdict.status == "consistent":
            return 0, "consistent"
        if verdict.status == "hypothesis-not-met":
            return 1, "hypothesis-not-met"
        return 1, (f"kindness-violated: witness λ{verdict.witness_index}"
                   f"={format_scalar(verdict.witness_value)}")
    if cmd == "condition-l":
        g, _ = _context(args)
        ok, witness = condition_l(g)
        if ok:
            return 0, "true"
        return 1, "false\nwitness: " + " ".join(witness.edges)
    if cmd == "boundary":
        g, _ = _context(args)
        x = parse_boundary(args.point, g)
        if args.action == "canonicalize":
            return 0, format_boundary(x)
        if args.action == "shift":
            return 0, format_boundary(shift(g, x, args.n))
        if args.action == "isolated":
            return (0, "true") if is_isolated(g, x) else (1, "false")
        return 0, str(isotropy(x))
    if cmd == "gpd":
        g, _ = _context(args)
        x = parse_boundary(args.x, g)
        y = parse_boundary(args.y, g)
        if args.action == "compose":
            if args.x2 is None or args.k2 is None or args.y2 is None:
                raise _UsageError("compose needs --x2, -k2 and --y2")
            left = make_groupoid_element(g, x, args.k, y)
            right = make_groupoid_element(
                g, parse_boundary(args.x2, g), args.k2, parse_boundary(args.y2, g))
            return 0, _format_gel(compose(g, left, right))
        try:
            gel = make_groupoid_element(g, x, args.k, y)
        except NotComposableError:
            raise
        except GroupoidError as ex:
            return 1, str(ex)
        if args.action == "inverse":
            gel = inverse(gel)
        return 0, _format_gel(gel)
    raise _UsageError(f"unknown command: {cmd}")


def run_command(argv: list[str]) -> tuple[int, str]:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _dispatch(args)
    except _UsageError as ex:
        return 2, f"usage error: {ex}"
    except ExpressionError as ex:
        return 2, f"error: {ex}"
    except (UnknownSymbolError, CoefficientError, GraphFormatError, PathError,
            MismatchError, PreconditionError, NotComposableError) as ex:
        return 3, f"error: {ex}"
    except GroupoidError as ex:
        return 3, f"error: {ex}"
    except TheoremViolationError as ex:
        return 4, f"theorem violation: {ex}"
    except OSError as ex:
        return 3, f"error: {ex}"
    except SystemExit as ex:  # argparse -h
        return int(ex.code or 0), ""


def main() -> None:
    code, text = run_command(sys.argv[1:])
    if text:
        print(text)
    sys.exit(code)


if __name__ == "__main__":
    main()
