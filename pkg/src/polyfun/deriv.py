"""Derivatives of one-variable polynomials, and the order-F candidate.

The candidate derivative always exists: its exponent object is the object
of distinct pairs in a fibre and its base is E, so over finite sets it
implements Σ_e X^(|fibre(e)|-1).  When the fibre diagonal is decidable the
construction also carries unit and counit 2-cells forming an adjunction
against multiplication by the linear polynomial; both triangle identities
are checked by explicit composition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ShapeError
from .diagram import DiagMap, Diagram, compose, identity
from .dpb import dpb, dpb_mediate
from .limits import FibrePowerResult, bang, diagonal, product, pullback
from .negation import DecidabilityResult, decidability, distinct_power, negate
from .counting import CountingPoly
from .poly import (CartesianPolyMap, Polynomial, ProductPoly, cell_compose,
                   counting_polynomial, identity_cell, linear_poly,
                   poly_product_detailed)


@dataclass(frozen=True)
class CandidateDerivative:
    poly: Polynomial
    power: FibrePowerResult   # E ×_B E with both projections
    w_incl: DiagMap           # distinct pairs → E ×_B E
    diag: DiagMap             # E → E ×_B E


def derivative_candidate(poly: Polynomial) -> CandidateDerivative:
    if not poly.is_one_variable():
        raise ShapeError("derivative: needs I = J = 1")
    fp, w_incl = distinct_power(poly.p, 2)
    diag = diagonal(poly.p, 2)
    pleg = compose(w_incl, fp.projections[0])
    dpoly = Polynomial(bang(w_incl.dom, poly.i), pleg, bang(poly.e, poly.j))
    return CandidateDerivative(dpoly, fp, w_incl, diag)


@dataclass(frozen=True)
class AdjunctionWitness:
    unit: CartesianPolyMap
    counit: CartesianPolyMap
    triangles_ok: bool


@dataclass(frozen=True)
class DerivativeResult:
    poly: Polynomial
    candidate: CandidateDerivative
    decidable: bool
    decidability: DecidabilityResult
    witness: AdjunctionWitness | None
    note: str | None


def _embed_left(e: Diagram, prod: ProductPoly) -> DiagMap:
    """E → E·B' + E'·B through the first summand (pairing with the point)."""
    el = prod.e_left
    one = el.projections[1].cod
    to_el = el.mediate([identity(e), bang(e, one)])
    return compose(to_el, prod.e_cop.injections[0])


def _embed_right(b: Diagram, prod: ProductPoly) -> DiagMap:
    """B → E·B' + E'·B through the second summand."""
    er = prod.e_right
    one = er.projections[0].cod
    to_er = er.mediate([bang(b, one), identity(b)])
    return compose(to_er, prod.e_cop.injections[1])


def derivative_unit(poly: Polynomial) -> CartesianPolyMap:
    """η: P → D(P∗1); exists without any decidability assumption."""
    prod = poly_product_detailed(poly, linear_poly(poly.e.poset))
    dq = derivative_candidate(prod.poly)
    iota_e = _embed_left(poly.e, prod)    # E → E_{P∗1}
    iota_b = _embed_right(poly.b, prod)   # B → E_{P∗1}
    on_b = iota_b
    first = compose(poly.p, iota_b)       # e ↦ point of B-copy over p(e)
    pair = dq.power.mediate([first, iota_e])
    comps = {}
    w = dq.w_incl.dom
    for j in poly.e.poset.elements:
        lookup = {dq.w_incl.at(j, i): i for i in range(w.size(j))}
        comps[j] = tuple(lookup[v] for v in pair.components[j])
    on_e = DiagMap(poly.e, w, comps)
    return CartesianPolyMap(poly, dq.poly, on_e, on_b)


def derivative_counit_maps(poly: Polynomial, cand: CandidateDerivative):
    """Raw counit data ε: DP∗1 → P; a valid 2-cell only if δ_p is decidable."""
    prod = poly_product_detailed(cand.poly, linear_poly(poly.e.poset))
    el, er = prod.e_left, prod.e_right
    # (distinct pair, ·) ↦ second component; (·, e) ↦ e
    leg1 = compose(el.projections[0],
                   compose(cand.w_incl, cand.power.projections[1]))
    leg2 = er.projections[1]
    on_e = prod.e_cop.copair([leg1, leg2])
    on_b = compose(prod.b_prod.projections[0], poly.p)
    return prod, on_e, on_b


def derivative_counit(poly: Polynomial, cand: CandidateDerivative) -> CartesianPolyMap:
    prod, on_e, on_b = derivative_counit_maps(poly, cand)
    return CartesianPolyMap(prod.poly, poly, on_e, on_b)


def linear_action(cell: CartesianPolyMap, src_prod: ProductPoly,
                  dst_prod: ProductPoly) -> CartesianPolyMap:
    """The 2-cell cell ∗ 1 between the given product presentations."""
    one_l = src_prod.e_left.projections[1].cod
    el_leg = dst_prod.e_left.mediate(
        [compose(src_prod.e_left.projections[0], cell.on_e),
         bang(src_prod.e_left.obj, one_l)])
    er_leg = dst_prod.e_right.mediate(
        [bang(src_prod.e_right.obj, one_l),
         compose(src_prod.e_right.projections[1], cell.on_b)])
    on_e = src_prod.e_cop.copair(
        [compose(el_leg, dst_prod.e_cop.injections[0]),
         compose(er_leg, dst_prod.e_cop.injections[1])])
    on_b = dst_prod.b_prod.mediate(
        [compose(src_prod.b_prod.projections[0], cell.on_b),
         bang(src_prod.b_prod.obj, one_l)])
    return CartesianPolyMap(src_prod.poly, dst_prod.poly, on_e, on_b)


def derivative_cell_maps(on_e: DiagMap, src_cand: CandidateDerivative,
                         dst_cand: CandidateDerivative):
    """D of a cell, on raw maps: distinct pairs map coordinatewise."""
    pair = dst_cand.power.mediate(
        [compose(compose(src_cand.w_incl, src_cand.power.projections[0]), on_e),
         compose(compose(src_cand.w_incl, src_cand.power.projections[1]), on_e)])
    w = dst_cand.w_incl.dom
    comps = {}
    for j in on_e.dom.poset.elements:
        lookup = {dst_cand.w_incl.at(j, i): i for i in range(w.size(j))}
        row = []
        for v in pair.components[j]:
            if v not in lookup:
                raise ShapeError("derivative action: image pair not distinct")
            row.append(lookup[v])
        comps[j] = tuple(row)
    return DiagMap(src_cand.w_incl.dom, w, comps), on_e


def derivative_action(cell: CartesianPolyMap, src_cand: CandidateDerivative,
                      dst_cand: CandidateDerivative) -> CartesianPolyMap:
    d_on_e, d_on_b = derivative_cell_maps(cell.on_e, src_cand, dst_cand)
    return CartesianPolyMap(src_cand.poly, dst_cand.poly, d_on_e, d_on_b)


def check_triangle_identities(poly: Polynomial, unit: CartesianPolyMap,
                              counit: CartesianPolyMap,
                              cand: CandidateDerivative) -> bool:
    """Compose both triangle composites and compare with identity cells."""
    poset = poly.e.poset
    lin = linear_poly(poset)
    # (ε at P∗1) ∘ (η ∗ 1) = id on P∗1
    p_prod = poly_product_detailed(poly, lin)
    q = p_prod.poly
    dq_cand = derivative_candidate(q)
    dq_prod = poly_product_detailed(dq_cand.poly, lin)
    eta_times_one = linear_action(unit, p_prod, dq_prod)
    eps_q = derivative_counit(q, dq_cand)
    t1 = cell_compose(eta_times_one, eps_q)
    ok1 = (t1.on_e == identity(q.e)) and (t1.on_b == identity(q.b))
    # D(ε) ∘ (η at DP) = id on DP
    dp = cand.poly
    eta_dp = derivative_unit(dp)
    dp_prod = poly_product_detailed(dp, lin)
    ddp_cand = derivative_candidate(dp_prod.poly)
    d_eps = derivative_action(counit, ddp_cand, cand)
    t2 = cell_compose(eta_dp, d_eps)
    ok2 = (t2.on_e == identity(dp.e)) and (t2.on_b == identity(dp.b))
    return ok1 and ok2


def derivative(poly: Polynomial) -> DerivativeResult:
    """The candidate derivative, plus the adjunction witness when the fibre
    diagonal is decidable (otherwise a report that it is not)."""
    cand = derivative_candidate(poly)
    dec = decidability(cand.diag)
    if not dec.decidable:
        return DerivativeResult(cand.poly, cand, False, dec, None,
                                "fibre diagonal is not decidable; the "
                                "derivative is witnessed only after inverting "
                                "dense monos")
    unit = derivative_unit(poly)
    counit = derivative_counit(poly, cand)
    ok = check_triangle_identities(poly, unit, counit, cand)
    witness = AdjunctionWitness(unit, counit, ok)
    if not ok:  # pragma: no cover - triangle identities hold by construction
        raise ShapeError("derivative: triangle identities failed")
    return DerivativeResult(cand.poly, cand, True, dec, witness, None)


# -- order-F candidate ----------------------------------------------------------

@dataclass(frozen=True)
class OrderFResult:
    poly: Polynomial
    power_obj: Diagram       # F-fold fibre power of p
    distinct_obj: Diagram    # distinct F-families
    hole_obj: Diagram        # one-hole contexts of order F
    counting: CountingPoly | None


def candidate_derivative_orderF(poly: Polynomial, f: Diagram) -> OrderFResult:
    """Mechanical order-F candidate: two distributivity pullbacks define the
    F-fold powers, comparison maps come from dpb factorization, and the final
    negation carves out the one-hole contexts."""
    if not poly.is_one_variable():
        raise ShapeError("order-F candidate: needs I = J = 1")
    if f.poset != poly.e.poset:
        raise ShapeError("order-F candidate: F lives on a different poset")
    e, b, p = poly.e, poly.b, poly.p
    fe = product([f, e])
    fb = product([f, b])
    f_p = fb.mediate([fe.projections[0], compose(fe.projections[1], p)])
    pi_b = fb.projections[1]
    d1 = dpb(f_p, pi_b)                       # F-fold fibre power, side over B
    # comparison maps: (FE, E) is a pullback around (F·p, π_B)
    iota, _apex_map = dpb_mediate(d1, identity(fe.obj), fe.projections[1], p)
    # iota: E → F-power sends e to the constant family at e
    neg1 = negate(iota)
    w = neg1.complement                        # distinct F-families
    w_anchor = compose(neg1.negmap, d1.right)  # → B
    fw = product([f, w])
    # evaluation F × W → E, through the apex of the power construction
    apex_pb = pullback(d1.p, d1.right)
    assert apex_pb.obj == d1.apex
    fb_leg = fb.mediate([fw.projections[0], compose(fw.projections[1], w_anchor)])
    side_leg = compose(fw.projections[1], neg1.negmap)
    to_apex = apex_pb.mediate(fb_leg, side_leg)
    ev = compose(to_apex, compose(d1.counit, fe.projections[1]))
    exw = pullback(p, w_anchor)                # E ×_B W
    ev_id = exw.mediate(ev, fw.projections[1])
    neg2 = negate(ev_id)
    hole = neg2.complement
    pleg = compose(neg2.negmap, exw.p2)
    out = Polynomial(bang(hole, poly.i), pleg, bang(w, poly.j))
    counting = None
    if len(e.poset.elements) == 1:
        counting = counting_polynomial(out)
    return OrderFResult(out, d1.side, w, hole, counting)
