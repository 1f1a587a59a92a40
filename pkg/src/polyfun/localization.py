"""The category of fractions inverting dense monomorphisms.

Morphisms X ⇝ Y are spans (w: M→X, f: M→Y) with w a dense mono; composition
is by pullback.  Two parallel spans are identified when a connecting object
exists; since any connecting object factors through the equalizer of the
right legs inside the pullback of the left legs, and density is upward
closed among subobjects, span equality is decided on that single maximal
candidate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BoundaryError, ShapeError
from .diagram import (DiagMap, Diagram, classify_map, compose, hom_maps,
                      identity, subdiagram)
from .dpb import dpb
from .limits import bang, equalizer, pullback
from .negation import is_dense_mono
from .poly import (CartesianPolyMap, Polynomial, linear_poly,
                   poly_product_detailed)
from .deriv import (CandidateDerivative, derivative_candidate,
                    derivative_cell_maps, derivative_counit_maps,
                    derivative_unit)


@dataclass(frozen=True)
class Span:
    left: DiagMap    # M → X, dense mono
    right: DiagMap   # M → Y

    def __post_init__(self):
        if self.left.dom != self.right.dom:
            raise BoundaryError("Span: legs have different domains")
        if not is_dense_mono(self.left):
            raise ShapeError("Span: left leg is not a dense mono")

    @property
    def mid(self) -> Diagram:
        return self.left.dom

    @property
    def source(self) -> Diagram:
        return self.left.cod

    @property
    def target(self) -> Diagram:
        return self.right.cod


def embed(f: DiagMap) -> Span:
    """The canonical functor into the localization on a map."""
    return Span(identity(f.dom), f)


def identity_span(x: Diagram) -> Span:
    return Span(identity(x), identity(x))


def invert_dense_mono(w: DiagMap) -> Span:
    """The formal inverse of a dense mono."""
    if not is_dense_mono(w):
        raise ShapeError("invert_dense_mono: not a dense mono")
    return Span(w, identity(w.dom))


def span_compose(g: Span, f: Span) -> Span:
    """Composite g∘f by pullback (f applies first)."""
    if f.target != g.source:
        raise BoundaryError("span_compose: boundaries do not match")
    pb = pullback(f.right, g.left)
    return Span(compose(pb.p1, f.left), compose(pb.p2, g.right))


def span_equal(f: Span, g: Span) -> bool:
    """Identification of parallel spans by a connecting object.

    The maximal candidate is the equalizer of the two right legs inside the
    pullback of the left legs; the spans are identified iff its leg to the
    common source is a dense mono.
    """
    if f.source != g.source or f.target != g.target:
        raise BoundaryError("span_equal: spans are not parallel")
    pb = pullback(f.left, g.left)
    t_incl = equalizer(compose(pb.p1, f.right), compose(pb.p2, g.right))
    to_source = compose(t_incl, compose(pb.p1, f.left))
    return is_dense_mono(to_source)


@dataclass(frozen=True)
class SpanPullback:
    apex: Diagram
    proj1: Span  # apex ⇝ source of f
    proj2: Span  # apex ⇝ source of g


def span_pullback(f: Span, g: Span) -> SpanPullback:
    """Pullback of a cospan of spans: pull the right legs back in the base
    category; both projections are then plain embedded maps."""
    if f.target != g.target:
        raise BoundaryError("span_pullback: no common codomain")
    pb = pullback(f.right, g.right)
    return SpanPullback(pb.obj,
                        embed(compose(pb.p1, f.left)),
                        embed(compose(pb.p2, g.left)))


@dataclass(frozen=True)
class SpanDpb:
    counit: Span   # apex ⇝ source of u
    top: Span      # apex ⇝ side
    right: Span    # side ⇝ target of p
    apex: Diagram
    side: Diagram


def _counit_iso_top(d) -> DiagMap:
    """For a dpb whose counit is invertible, the top map rebased on dom u."""
    from .diagram import invert_iso
    return compose(invert_iso(d.counit), d.top)


def span_dpb(u: Span, p: Span) -> SpanDpb:
    """Distributivity pullback around composable spans u: V ⇝ X, p: X ⇝ B.

    Four distributivity pullbacks in the base category: the genuine one
    around the pulled-back pair, plus three with invertible counits that
    transport the dense monos to the top of the diagram.
    """
    if u.target != p.source:
        raise BoundaryError("span_dpb: spans do not compose")
    pb = pullback(u.right, p.left)       # N' = N ×_X M
    w1, u1 = pb.p1, pb.p2                # w1 dense mono (pullback of p.left)
    d1 = dpb(u1, p.right)                # the working dpb: side R, apex Q
    d2 = dpb(w1, u.left)                 # counit iso: u.left is mono
    z1 = _counit_iso_top(d2)             # N' → S
    d3 = dpb(d1.counit, z1)              # counit iso: z1 is mono
    z2 = _counit_iso_top(d3)             # Q → W
    d4 = dpb(d3.right, d2.right)         # counit iso: d2.right is mono
    w3 = _counit_iso_top(d4)             # W → G
    top_left = compose(z2, w3)           # Q → G, dense mono
    return SpanDpb(counit=embed(d4.right),
                   top=Span(top_left, d1.top),
                   right=embed(d1.right),
                   apex=d4.side, side=d1.side)


# -- hom-set enumeration in the localization ------------------------------------

def subdiagrams(x: Diagram):
    """All transition-closed index subsets of x, as inclusion maps."""
    poset = x.poset
    order = poset.topo

    def extend(idx, chosen):
        if idx == len(order):
            yield {j: tuple(chosen[j]) for j in order}
            return
        j = order[idx]
        forced = set()
        for i in order[:idx]:
            if poset.lt(i, j):
                forced.update(x.tr(i, j)[a] for a in chosen[i])
        free = [a for a in range(x.size(j)) if a not in forced]
        for r in range(len(free) + 1):
            for extra in itertools.combinations(free, r):
                chosen[j] = sorted(forced | set(extra))
                yield from extend(idx + 1, chosen)
        del chosen[j]

    for keep in extend(0, {}):
        yield subdiagram(x, keep)


def dense_subobjects(x: Diagram):
    for incl in subdiagrams(x):
        if is_dense_mono(incl):
            yield incl


def loc_hom_spans(x: Diagram, y: Diagram):
    """All spans x ⇝ y up to choice of mid carrier (not quotiented)."""
    for incl in dense_subobjects(x):
        for f in hom_maps(incl.dom, y):
            yield Span(incl, f)


def loc_hom_classes(x: Diagram, y: Diagram) -> list:
    """Representatives of hom(x, y) in the localization, up to span_equal."""
    reps = []
    for s in loc_hom_spans(x, y):
        if not any(span_equal(s, r) for r in reps):
            reps.append(s)
    return reps


# -- localized polynomial 2-cells -----------------------------------------------

@dataclass(frozen=True)
class LocCell:
    """A polynomial 2-cell whose components are localization morphisms."""
    src: Polynomial
    dst: Polynomial
    on_e: Span
    on_b: Span

    def __post_init__(self):
        if self.on_e.source != self.src.e or self.on_e.target != self.dst.e:
            raise BoundaryError("LocCell: on_e boundaries wrong")
        if self.on_b.source != self.src.b or self.on_b.target != self.dst.b:
            raise BoundaryError("LocCell: on_b boundaries wrong")
        lhs = span_compose(embed(self.dst.p), self.on_e)
        rhs = span_compose(self.on_b, embed(self.src.p))
        if not span_equal(lhs, rhs):
            raise ShapeError("LocCell: middle square does not commute")


def loc_identity_cell(poly: Polynomial) -> LocCell:
    return LocCell(poly, poly, identity_span(poly.e), identity_span(poly.b))


def loc_cell_compose(f: LocCell, g: LocCell) -> LocCell:
    if f.dst != g.src:
        raise BoundaryError("loc_cell_compose: boundaries do not match")
    return LocCell(f.src, g.dst,
                   span_compose(g.on_e, f.on_e), span_compose(g.on_b, f.on_b))


def loc_cell_equal(f: LocCell, g: LocCell) -> bool:
    return span_equal(f.on_e, g.on_e) and span_equal(f.on_b, g.on_b)


def embed_cell(cell: CartesianPolyMap) -> LocCell:
    return LocCell(cell.src, cell.dst, embed(cell.on_e), embed(cell.on_b))


@dataclass(frozen=True)
class LocalizedDerivative:
    poly: Polynomial
    candidate: CandidateDerivative
    unit: LocCell
    counit: LocCell
    comparison: DiagMap        # exponent of DP∗1 → kernel pair, dense mono
    comparison_inverse: Span
    decidable: bool
    counit_iso_ok: bool
    triangles_ok: bool


def localized_derivative(poly: Polynomial) -> LocalizedDerivative:
    """Derivative witness in the localization.

    The unit is an honest cartesian cell; the counit's middle square has a
    dense-mono comparison with the kernel-pair pullback, so it becomes
    cartesian once dense monos are inverted.  Triangle identities are
    verified under span equality.
    """
    cand = derivative_candidate(poly)
    from .negation import decidability
    dec = decidability(cand.diag)
    unit_cart = derivative_unit(poly)
    unit = embed_cell(unit_cart)
    prod, on_e, on_b = derivative_counit_maps(poly, cand)
    counit = LocCell(prod.poly, poly, embed(on_e), embed(on_b))
    # middle-square comparison with the canonical pullback
    pb = pullback(poly.p, on_b)
    comparison = pb.mediate(on_e, prod.poly.p)
    if not is_dense_mono(comparison):  # pragma: no cover - holds by construction
        raise ShapeError("localized_derivative: comparison is not a dense mono")
    inv = invert_dense_mono(comparison)
    fwd = embed(comparison)
    counit_iso_ok = (span_equal(span_compose(inv, fwd), identity_span(comparison.dom))
                     and span_equal(span_compose(fwd, inv), identity_span(pb.obj)))
    triangles_ok = _loc_triangles(poly, cand, unit_cart, on_e, on_b, prod)
    return LocalizedDerivative(cand.poly, cand, unit, counit, comparison, inv,
                               dec.decidable, counit_iso_ok, triangles_ok)


def _loc_triangles(poly, cand, unit_cart, eps_on_e, eps_on_b, eps_prod) -> bool:
    from .deriv import linear_action
    poset = poly.e.poset
    lin = linear_poly(poset)
    # (ε at P∗1) ∘ (η ∗ 1) against the identity on P∗1
    p_prod = poly_product_detailed(poly, lin)
    q = p_prod.poly
    dq_cand = derivative_candidate(q)
    dq_prod = poly_product_detailed(dq_cand.poly, lin)
    eta_times_one = linear_action(unit_cart, p_prod, dq_prod)
    _, eps_q_on_e, eps_q_on_b = derivative_counit_maps(q, dq_cand)
    t1_on_e = compose(eta_times_one.on_e, eps_q_on_e)
    t1_on_b = compose(eta_times_one.on_b, eps_q_on_b)
    ok1 = (span_equal(embed(t1_on_e), identity_span(q.e))
           and span_equal(embed(t1_on_b), identity_span(q.b)))
    # D(ε) ∘ (η at DP) against the identity on DP
    dp = cand.poly
    eta_dp = derivative_unit(dp)
    dp_prod = poly_product_detailed(dp, lin)
    ddp_cand = derivative_candidate(dp_prod.poly)
    d_on_e, d_on_b = derivative_cell_maps(eps_on_e, ddp_cand, cand)
    t2_on_e = compose(eta_dp.on_e, d_on_e)
    t2_on_b = compose(eta_dp.on_b, d_on_b)
    ok2 = (span_equal(embed(t2_on_e), identity_span(dp.e))
           and span_equal(embed(t2_on_b), identity_span(dp.b)))
    return ok1 and ok2
