"""Exact symbolic computation in Leavitt path algebras of finite graphs.

The package represents elements as finite sums of monomials mu nu^* over a
star-subring of the complex numbers, keeps them in a canonical normal form,
and builds diagonal-subalgebra analysis, *-homomorphism checking and the
boundary-path groupoid on top of that core.
"""

from .algebra import (AlgebraElement, Monomial, edge_element, format_element,
                      from_terms, make_monomial, monomial_key, path_element,
                      unit_element, vertex_element, zero_element)
from .diagonal import (DiagonalAnalysis, DiagonalDecomposition, ProofTrace,
                       TraceRow, diagonal_analyze, format_trace,
                       is_projection, proof_trace)
from .errors import (CoefficientError, ExpressionError, GraphFormatError,
                     GroupoidError, LeavittError, MismatchError,
                     NotComposableError, PathError, PreconditionError,
                     TheoremViolationError, UnknownSymbolError)
from .expressions import parse_expression
from .graphs import (Edge, Graph, Path, classify_vertices, condition_l,
                     graph_from, load_graph, parse_graph_file, path_key,
                     path_le)
from .groupoid import (BoundaryPath, CylinderSet, GroupoidElement,
                       boundary_finite, boundary_periodic, canonical_boundary,
                       compose, cylinder, cylinder_intersect,
                       cylinder_membership, format_boundary, inverse,
                       is_isolated, isotropy, make_groupoid_element,
                       parse_boundary, shift, unit)
from .homs import (HomSpec, PreservationReport, apply_hom,
                   check_diagonal_preservation, hom_from, load_hom_spec,
                   validate_hom)
from .rings import (DYADIC_RATIONALS, GAUSSIAN_INTEGERS, INTEGERS, RATIONALS,
                    RINGS, GaussianInt, KindVerdict, Scalar, StarRing,
                    format_scalar, kind_instance_check, parse_scalar)
from .sampling import (diagonal_projection, exchange_pairs, exchange_unitary,
                       random_antichain, random_boundary_point,
                       random_element, random_homogeneous,
                       random_projection_steps)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
