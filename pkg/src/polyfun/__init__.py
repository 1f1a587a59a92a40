"""polyfun: exact calculus of finite-set-valued diagrams on a finite poset.

Distributivity pullbacks, negation and the dense-closed factorization,
polynomial terms and derivatives, and the localization inverting dense
monomorphisms, with counting oracles throughout.
"""

from .poset import FinPoset
from .diagram import (DiagMap, Diagram, MapFlags, classify_map, compose,
                      count_hom, diagram_iso, from_sizes, hom_maps, identity,
                      image_subobject, invert_iso, iso_maps, slice_iso,
                      subdiagram)
from .limits import (bang, diagonal, equalizer, fibre_power, finite_limit,
                     product, pullback, terminal)
from .colimits import (codiagonal, coproduct, copower, decompose_over_sum,
                       initial, initial_map)
from .slices import (SliceObj, as_slice, delta, pi, pi_counit, pi_transpose,
                     pi_unit, sigma, slice_hom_count, slice_hom_maps)
from .dpb import DpbResult, dpb, dpb_mediate
from .negation import (DecidabilityResult, DensityFlags, DistinctTuples,
                       FactorizationResult, NegationResult, classify_density,
                       closure, decidability, distinct_tuples,
                       factorize_dense_closed, is_dense_mono,
                       neg_contravariant, negate, sub_eq, sub_intersection,
                       sub_leq)
from .counting import CountingPoly, formal_derivative
from .poly import (CartesianPolyMap, Polynomial, cell_compose,
                   counting_polynomial, extension_eval, identity_cell,
                   identity_poly, linear_poly, poly_compose, poly_equiv,
                   poly_from_map, poly_product, weber_composite,
                   weber_mediate)
from .terms import (HomtermResult, NFibreResult, classical_term,
                    constant_term, homterm, n_fibre_mediate,
                    n_fibre_pullback)
from .deriv import (AdjunctionWitness, DerivativeResult, OrderFResult,
                    candidate_derivative_orderF, derivative)
from .localization import (LocCell, LocalizedDerivative, Span, embed,
                           identity_span, invert_dense_mono, loc_hom_classes,
                           localized_derivative, span_compose, span_dpb,
                           span_equal, span_pullback)
from .report import discrepancy_report
from .errors import (BoundaryError, ModelError, PolyfunError,
                     ResourceBoundError, ShapeError)

__version__ = "0.1.0"
