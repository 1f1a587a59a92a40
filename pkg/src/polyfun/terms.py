"""Terms of polynomials: constant term, n-fibre pullbacks, homogeneous and
monomial terms.

Two term semantics ship side by side.  homterm follows the explicit n-fibre
pullback construction, whose base consists of fibre enumerations (ordered
n-tuples exhausting a fibre of size n), so its coefficient at X^n is
n!·(number of size-n fibres).  classical_term selects fibres by size (or by
the multiset of variable labels), giving the plain histogram coefficient.
The two provably differ from n = 2 up; the discrepancy report exposes both.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ShapeError
from .diagram import DiagMap, Diagram, classify_map, compose, identity, subdiagram
from .colimits import (CoproductResult, codiagonal, copower, initial,
                       initial_map)
from .dpb import DpbResult, dpb
from .limits import bang, pullback
from .negation import NegationResult, distinct_power, negate
from .poly import CartesianPolyMap, Polynomial


def constant_term(poly: Polynomial) -> Polynomial:
    """The sub-polynomial of hereditarily empty fibres: I ← 0 → ¬p-domain → J."""
    neg = negate(poly.p)
    zero = initial(poly.e.poset)
    s = DiagMap(zero, poly.i, {j: () for j in poly.e.poset.elements})
    p = initial_map(neg.complement)
    t = compose(neg.negmap, poly.t)
    return Polynomial(s, p, t)


@dataclass(frozen=True)
class NFibreResult:
    """Terminal pullback of shape n×A → A over p.

    `term_base` carries the enumerated size-n fibres; `left` is the
    evaluation n·term_base → E and `top_iso` witnesses that the apex of the
    underlying construction is the copower with the fold map on top.
    """
    n: int
    term_base: Diagram
    base_to_b: DiagMap          # term_base → B
    copies: CoproductResult     # n · term_base
    codiag: DiagMap             # n·term_base → term_base
    left: DiagMap               # n·term_base → E
    top_iso: DiagMap | None     # construction apex → n·term_base
    power: object               # FibrePowerResult of the distinct power (n>=1)
    power_inclusion: DiagMap | None
    kernel: object              # PullbackResult W ×_B E (n>=1)
    ndelta: DiagMap | None      # n·W → W ×_B E
    dpb_result: DpbResult | None


def n_fibre_pullback(p: DiagMap, n: int) -> NFibreResult:
    """Construct the n-fibre pullback about p.

    n = 0 delegates to the negation (hereditarily empty fibres); n >= 1 runs
    the distinct-power construction: Π along the projection W ×_B E → W of
    the n-fold injection tuple map, then the pullback on top.
    """
    if n < 0:
        raise ShapeError("n_fibre_pullback: n must be >= 0")
    e, b = p.dom, p.cod
    poset = e.poset
    if n == 0:
        neg = negate(p)
        copies = copower(0, neg.complement)
        res = NFibreResult(0, neg.complement, neg.negmap, copies,
                           initial_map(neg.complement), initial_map(e),
                           None, None, None, None, None, None)
        _check_nfibre_square(p, res)
        return res
    fp, incl = distinct_power(p, n)
    w = incl.dom
    w_to_b = compose(incl, fp.anchor)
    kernel = pullback(w_to_b, p)              # pairs (t, e) in a shared fibre
    copies_w = copower(n, w)
    legs = []
    for i in range(n):
        # tuple t goes to (t, t_i)
        proj_i = compose(incl, fp.projections[i])
        legs.append(kernel.mediate(identity(w), proj_i))
    ndelta = copies_w.copair(legs)
    d = dpb(ndelta, kernel.p1)                # around n·δ and π: W×E → W
    term_base = d.side
    base_to_b = compose(d.right, w_to_b)
    copies = copower(n, term_base)
    # apex ≅ n·term_base: tag from the counit, body from the top map
    comps = {}
    for j in poset.elements:
        row = []
        for i in range(d.apex.size(j)):
            tag = copies_w.obj.elem(j, d.counit.at(j, i))[0]
            row.append(copies.obj.index(j, (tag, d.top.at(j, i))))
        comps[j] = tuple(row)
    top_iso = DiagMap(d.apex, copies.obj, comps)
    if not classify_map(top_iso).iso:
        raise ShapeError("n_fibre_pullback: apex failed to split as a copower")
    left_src = compose(d.counit, compose(ndelta, kernel.p2))  # apex → E
    left = _transport_along_iso(top_iso, left_src)
    res = NFibreResult(n, term_base, base_to_b, copies,
                       codiagonal(copies, term_base), left, top_iso,
                       fp, incl, kernel, ndelta, d)
    _check_nfibre_square(p, res)
    return res


def _transport_along_iso(iso: DiagMap, f: DiagMap) -> DiagMap:
    """Rewrite f: dom(iso) → Z as a map from cod(iso)."""
    from .diagram import invert_iso
    return compose(invert_iso(iso), f)


def _check_nfibre_square(p: DiagMap, res: NFibreResult) -> None:
    assert compose(res.codiag, res.base_to_b) == compose(res.left, p)
    pb = pullback(p, res.base_to_b)
    cmp_map = pb.mediate(res.left, res.codiag)
    assert classify_map(cmp_map).iso, "n-fibre square must be a pullback"


def n_fibre_mediate(nf: NFibreResult, f: DiagMap, cop: CoproductResult,
                    g: DiagMap) -> DiagMap:
    """Factor a competitor pullback (n×A → A, g: n×A → E, f: A → B) through
    the n-fibre pullback; returns the unique h: A → term_base with
    base_to_b ∘ h = f and left ∘ (n·h) = g."""
    if nf.n == 0:
        if not g.dom.is_empty():
            raise ShapeError("n_fibre_mediate: 0-copower competitor must be empty")
        comps = {}
        for j in f.dom.poset.elements:
            lookup = {nf.base_to_b.at(j, i): i
                      for i in range(nf.term_base.size(j))}
            try:
                comps[j] = tuple(lookup[v] for v in f.components[j])
            except KeyError:
                raise ShapeError("n_fibre_mediate: competitor hits a nonempty fibre")
        h = DiagMap(f.dom, nf.term_base, comps)
        assert compose(h, nf.base_to_b) == f
        return h
    n = nf.n
    a = f.dom
    poset = a.poset
    w = nf.power_inclusion.dom
    legs = [compose(cop.injections[i], g) for i in range(n)]
    # tuple map A → W: a ↦ (g₁a, …, gₙa), which must be hereditarily distinct
    w_comps = {}
    for j in poset.elements:
        row = []
        for i in range(a.size(j)):
            t = tuple(l.at(j, i) for l in legs)
            try:
                fp_idx = nf.power.obj.index(j, t)
            except KeyError:
                raise ShapeError("n_fibre_mediate: competitor legs not in a shared fibre")
            lookup = {nf.power_inclusion.at(j, x): x for x in range(w.size(j))}
            if fp_idx not in lookup:
                raise ShapeError("n_fibre_mediate: competitor tuple not hereditarily distinct")
            row.append(lookup[fp_idx])
        w_comps[j] = tuple(row)
    to_w = DiagMap(a, w, w_comps)
    # section family over each tuple: position e' in the fibre is tagged by
    # the unique coordinate of the (distinct) tuple equal to e'
    from .slices import _pi_domain
    comps = {}
    for j in poset.elements:
        row = []
        for i in range(a.size(j)):
            t_idx = to_w.at(j, i)
            vals = []
            for (k, ke) in _pi_domain(nf.kernel.p1, j, t_idx):
                tk, ek = nf.kernel.obj.elem(k, ke)
                tup = nf.power.obj.elem(k, nf.power_inclusion.at(k, tk))
                tag = tup.index(ek)
                vals.append(nf.ndelta.dom.index(k, (tag, tk)))
            row.append(nf.term_base.index(j, (t_idx, tuple(vals))))
        comps[j] = tuple(row)
    h = DiagMap(a, nf.term_base, comps)
    assert compose(h, nf.base_to_b) == f
    n_h = cop.copair([compose(h, nf.copies.injections[i]) for i in range(n)])
    assert compose(n_h, nf.left) == g
    return h


@dataclass(frozen=True)
class HomtermResult:
    poly: Polynomial
    counit: CartesianPolyMap
    nfibre: NFibreResult


def homterm(poly: Polynomial, n: int) -> HomtermResult:
    """Order-n homogeneous part by the n-fibre pullback (enumeration semantics),
    with the counit 2-cell into the original polynomial."""
    nf = n_fibre_pullback(poly.p, n)
    s = compose(nf.left, poly.s)
    t = compose(nf.base_to_b, poly.t)
    term = Polynomial(s, nf.codiag, t)
    counit = CartesianPolyMap(term, poly, nf.left, nf.base_to_b)
    return HomtermResult(term, counit, nf)


def classical_term(poly: Polynomial, order) -> Polynomial:
    """Loose term semantics on the one-element poset.

    `order` is an arity n (homogeneous term: fibres of size exactly n) or a
    sequence of I-indices σ (monomial term: fibres whose multiset of s-labels
    equals the multiset of σ).
    """
    poset = poly.e.poset
    if len(poset.elements) != 1:
        raise ShapeError("classical_term: needs the one-element poset")
    j = poset.elements[0]
    fibres = {}
    for i in range(poly.e.size(j)):
        fibres.setdefault(poly.p.at(j, i), []).append(i)
    if isinstance(order, int):
        if order < 0:
            raise ShapeError("classical_term: arity must be >= 0")
        chosen = [b for b in range(poly.b.size(j))
                  if len(fibres.get(b, ())) == order]
    else:
        sigma = sorted(order)
        if any(not (0 <= v < poly.i.size(j)) for v in sigma):
            raise ShapeError("classical_term: σ labels outside I")
        chosen = [b for b in range(poly.b.size(j))
                  if sorted(poly.s.at(j, i) for i in fibres.get(b, ())) == sigma]
    b_incl = subdiagram(poly.b, {j: chosen})
    e_keep = [i for i in range(poly.e.size(j)) if poly.p.at(j, i) in set(chosen)]
    e_incl = subdiagram(poly.e, {j: e_keep})
    pos = {b: i for i, b in enumerate(chosen)}
    p = DiagMap(e_incl.dom, b_incl.dom,
                {j: tuple(pos[poly.p.at(j, i)] for i in e_keep)})
    return Polynomial(compose(e_incl, poly.s), p, compose(b_incl, poly.t))


def strict_coefficient(poly: Polynomial, n: int) -> int:
    """Order-n coefficient under enumeration semantics: n! · (#size-n fibres)."""
    from .poly import counting_polynomial
    return counting_polynomial(homterm(poly, n).poly).coefficient(n)


def classical_coefficient(poly: Polynomial, n: int) -> int:
    from .poly import counting_polynomial
    return counting_polynomial(classical_term(poly, n)).coefficient(n)
