"""Polynomials of diagrams, their extensions, composites, products, and 2-cells."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BoundaryError, ShapeError
from .counting import CountingPoly
from .diagram import (DiagMap, Diagram, classify_map, compose, identity,
                      iso_maps)
from .colimits import CoproductResult, coproduct
from .dpb import DpbResult, dpb, dpb_mediate
from .limits import (ProductResult, PullbackResult, bang, product, pullback,
                     terminal)
from .poset import FinPoset
from .slices import SliceObj, delta, pi, sigma


@dataclass(frozen=True)
class Polynomial:
    """A three-arrow diagram I ← E → B → J."""
    s: DiagMap  # E → I
    p: DiagMap  # E → B
    t: DiagMap  # B → J

    def __post_init__(self):
        if self.s.dom != self.p.dom:
            raise BoundaryError("Polynomial: s and p must share their domain")
        if self.p.cod != self.t.dom:
            raise BoundaryError("Polynomial: cod p must equal dom t")

    @property
    def e(self) -> Diagram:
        return self.p.dom

    @property
    def b(self) -> Diagram:
        return self.p.cod

    @property
    def i(self) -> Diagram:
        return self.s.cod

    @property
    def j(self) -> Diagram:
        return self.t.cod

    def is_one_variable(self) -> bool:
        poset = self.e.poset
        return (all(self.i.size(j) == 1 for j in poset.elements)
                and all(self.j.size(j) == 1 for j in poset.elements))


def identity_poly(poset: FinPoset) -> Polynomial:
    one = terminal(poset)
    idm = identity(one)
    return Polynomial(idm, idm, idm)


def linear_poly(poset: FinPoset) -> Polynomial:
    """The one-variable polynomial X (same data as the identity polynomial)."""
    return identity_poly(poset)


def constant_poly(poset: FinPoset, b: Diagram) -> Polynomial:
    """One-variable polynomial with empty exponent object over base b."""
    from .colimits import initial, initial_map
    one = terminal(poset)
    zero = initial(poset)
    return Polynomial(DiagMap(zero, one, {j: () for j in poset.elements}),
                      initial_map(b), bang(b, one))


def poly_from_map(p: DiagMap) -> Polynomial:
    """Wrap a bare map E → B as a one-variable polynomial."""
    one = terminal(p.dom.poset)
    return Polynomial(bang(p.dom, one), p, bang(p.cod, one))


def extension_eval(poly: Polynomial, x: SliceObj) -> SliceObj:
    """The polynomial's action on a slice over I: Σ_t Π_p Δ_s x."""
    if x.base != poly.i:
        raise BoundaryError("extension_eval: argument is not anchored at I")
    return sigma(poly.t, pi(poly.p, delta(poly.s, x)))


def counting_polynomial(poly: Polynomial) -> CountingPoly:
    """Fibre-size histogram of p as a formal polynomial (one-element poset,
    trivial boundaries only)."""
    poset = poly.e.poset
    if len(poset.elements) != 1:
        raise ShapeError("counting_polynomial: needs the one-element poset")
    if not poly.is_one_variable():
        raise ShapeError("counting_polynomial: needs I = J = 1")
    j = poset.elements[0]
    hist = {}
    sizes = [0] * poly.b.size(j)
    for v in poly.p.components[j]:
        sizes[v] += 1
    for n in sizes:
        hist[n] = hist.get(n, 0) + 1
    return CountingPoly(hist)


# -- cartesian maps of polynomials --------------------------------------------

@dataclass(frozen=True)
class CartesianPolyMap:
    """A 2-cell between polynomials whose middle square is a pullback."""
    src: Polynomial
    dst: Polynomial
    on_e: DiagMap
    on_b: DiagMap

    def __post_init__(self):
        src, dst = self.src, self.dst
        if self.on_e.dom != src.e or self.on_e.cod != dst.e:
            raise BoundaryError("CartesianPolyMap: on_e boundaries wrong")
        if self.on_b.dom != src.b or self.on_b.cod != dst.b:
            raise BoundaryError("CartesianPolyMap: on_b boundaries wrong")
        if compose(self.on_e, dst.s) != src.s:
            raise ShapeError("CartesianPolyMap: I-triangle does not commute")
        if compose(self.on_b, dst.t) != src.t:
            raise ShapeError("CartesianPolyMap: J-triangle does not commute")
        if compose(src.p, self.on_b) != compose(self.on_e, dst.p):
            raise ShapeError("CartesianPolyMap: middle square does not commute")
        pb = pullback(dst.p, self.on_b)
        cmp_map = pb.mediate(self.on_e, src.p)
        if not classify_map(cmp_map).iso:
            raise ShapeError("CartesianPolyMap: middle square is not a pullback")


def identity_cell(poly: Polynomial) -> CartesianPolyMap:
    return CartesianPolyMap(poly, poly, identity(poly.e), identity(poly.b))


def cell_compose(f: CartesianPolyMap, g: CartesianPolyMap) -> CartesianPolyMap:
    if f.dst != g.src:
        raise BoundaryError("cell_compose: boundaries do not match")
    return CartesianPolyMap(f.src, g.dst,
                            compose(f.on_e, g.on_e), compose(f.on_b, g.on_b))


def poly_equiv(p1: Polynomial, p2: Polynomial):
    """Search for an invertible cartesian map p1 → p2; None if there is none."""
    if p1.i != p2.i or p1.j != p2.j:
        raise BoundaryError("poly_equiv: different boundaries")
    t_fibres = {}
    for j in p2.b.poset.elements:
        t_fibres[j] = {}
        for i, v in enumerate(p2.t.components[j]):
            t_fibres[j].setdefault(v, []).append(i)

    def allowed_b(j, i):
        return t_fibres[j].get(p1.t.at(j, i), ())

    for on_b in iso_maps(p1.b, p2.b, allowed=allowed_b):
        ps_fibres = {}
        for j in p2.e.poset.elements:
            ps_fibres[j] = {}
            for i in range(p2.e.size(j)):
                key = (p2.p.at(j, i), p2.s.at(j, i))
                ps_fibres[j].setdefault(key, []).append(i)

        def allowed_e(j, i, _onb=on_b):
            key = (_onb.at(j, p1.p.at(j, i)), p1.s.at(j, i))
            return ps_fibres[j].get(key, ())

        for on_e in iso_maps(p1.e, p2.e, allowed=allowed_e):
            try:
                return CartesianPolyMap(p1, p2, on_e, on_b)
            except ShapeError:  # pragma: no cover - isos always cartesian
                continue
    return None


# -- composition (terminal composite diagram) ----------------------------------

@dataclass(frozen=True)
class WeberComposite:
    """The composite polynomial together with its construction pieces:
    middle pullback, right distributivity pullback, then left pullback."""
    outer: Polynomial
    inner: Polynomial
    poly: Polynomial
    middle: PullbackResult   # B ×_J S
    right_dpb: DpbResult     # around (middle → S) and q
    left_pb: PullbackResult  # E ×_B apex


def weber_composite(outer: Polynomial, inner: Polynomial) -> WeberComposite:
    if inner.j != outer.i:
        raise BoundaryError("composite: boundaries do not compose")
    mid = pullback(inner.t, outer.s)           # M = B ×_J S
    d = dpb(mid.p2, outer.p)                   # around M → S and q: S → T
    left = pullback(inner.p, compose(d.counit, mid.p1))  # E ×_B apex
    ppart = compose(left.p2, d.top)
    spart = compose(left.p1, inner.s)
    tpart = compose(d.right, outer.t)
    poly = Polynomial(spart, ppart, tpart)
    return WeberComposite(outer, inner, poly, mid, d, left)


def poly_compose(outer: Polynomial, inner: Polynomial) -> Polynomial:
    """Composite polynomial (inner first, then outer)."""
    return weber_composite(outer, inner).poly


@dataclass(frozen=True)
class WeberCompetitor:
    """A composite-shaped diagram over the same pair of polynomials."""
    to_e: DiagMap    # X' → E
    top_xy: DiagMap  # X' → Y'
    to_b: DiagMap    # Y' → B
    to_s: DiagMap    # Y' → S
    top_yz: DiagMap  # Y' → Z'
    to_t: DiagMap    # Z' → T


def _check_weber_competitor(outer, inner, c: WeberCompetitor) -> None:
    if compose(c.to_b, inner.t) != compose(c.to_s, outer.s):
        raise ShapeError("competitor: middle cone does not commute")
    left = pullback(inner.p, c.to_b)
    if not classify_map(left.mediate(c.to_e, c.top_xy)).iso:
        raise ShapeError("competitor: left square is not a pullback")
    right = pullback(outer.p, c.to_t)
    if not classify_map(right.mediate(c.to_s, c.top_yz)).iso:
        raise ShapeError("competitor: right square is not a pullback")


def weber_mediate(comp: WeberComposite, c: WeberCompetitor) -> tuple:
    """Unique factorization of a competitor through the composite diagram.

    Returns (x_map, y_map, z_map) with a stacked pullback verified on top.
    """
    _check_weber_competitor(comp.outer, comp.inner, c)
    to_mid = comp.middle.mediate(c.to_b, c.to_s)
    z_map, y_map = dpb_mediate(comp.right_dpb, to_mid, c.top_yz, c.to_t)
    x_map = comp.left_pb.mediate(c.to_e, compose(c.top_xy, y_map))
    sq = pullback(comp.left_pb.p2, y_map)
    if not classify_map(sq.mediate(x_map, c.top_xy)).iso:
        raise ShapeError("weber_mediate: left factoring square is not a pullback")
    return x_map, y_map, z_map


# -- products of one-variable polynomials --------------------------------------

@dataclass(frozen=True)
class ProductPoly:
    """p ∗ p' with carrier bookkeeping: exponent part E·B' + E'·B over B·B'."""
    poly: Polynomial
    e_cop: CoproductResult   # E×B' + E'×B
    e_left: ProductResult    # E × B'
    e_right: ProductResult   # E' × B
    b_prod: ProductResult    # B × B'


def poly_product_detailed(pl: Polynomial, pr: Polynomial) -> ProductPoly:
    if not (pl.is_one_variable() and pr.is_one_variable()):
        raise ShapeError("poly_product: needs one-variable polynomials")
    poset = pl.e.poset
    one = pl.i
    bb = product([pl.b, pr.b])
    el = product([pl.e, pr.b])
    er = product([pr.e, pl.b])
    cop = coproduct([el.obj, er.obj])
    # E×B' → B×B' via (e, b') ↦ (p e, b'); E'×B → B×B' via (e', b) ↦ (b, p' e')
    left_leg = bb.mediate([compose(el.projections[0], pl.p), el.projections[1]])
    right_leg = bb.mediate([er.projections[1], compose(er.projections[0], pr.p)])
    pmap = cop.copair([left_leg, right_leg])
    poly = Polynomial(bang(cop.obj, one), pmap, bang(bb.obj, pl.j))
    return ProductPoly(poly, cop, el, er, bb)


def poly_product(pl: Polynomial, pr: Polynomial) -> Polynomial:
    return poly_product_detailed(pl, pr).poly
