"""Slice objects and the base-change adjunction Δ ⊣ Π (plus Σ).

The dependent product Π_p x over p: E → B is computed pointwise: an element
over (j, b ∈ B(j)) is a family that assigns, to every k ≥ j and every
e ∈ E(k) lying over the transition image of b, an element of the x-fibre
over e, compatibly with the transitions of x.  The carrier is the list of
such families keyed (b, value-tuple) in lexicographic order, so the result
is deterministic.  On the one-element poset this is exactly the set of
sections of x.anchor over each p-fibre.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoundaryError, guard
from .diagram import Diagram, DiagMap, compose, count_hom, hom_maps, identity
from .limits import pullback


@dataclass(frozen=True)
class SliceObj:
    total: Diagram
    anchor: DiagMap

    def __post_init__(self):
        if self.anchor.dom != self.total:
            raise BoundaryError("SliceObj: anchor does not start at total")

    @property
    def base(self) -> Diagram:
        return self.anchor.cod


def as_slice(anchor: DiagMap) -> SliceObj:
    return SliceObj(anchor.dom, anchor)


def sigma(p: DiagMap, x: SliceObj) -> SliceObj:
    """Postcompose the anchor with p (left adjoint to base change)."""
    if x.base != p.dom:
        raise BoundaryError("sigma: slice is not anchored at dom p")
    return SliceObj(x.total, compose(x.anchor, p))


def delta(p: DiagMap, y: SliceObj) -> SliceObj:
    """Pull y back along p; carrier pairs (e, y-element), anchored by first leg."""
    if y.base != p.cod:
        raise BoundaryError("delta: slice is not anchored at cod p")
    pb = pullback(p, y.anchor)
    return SliceObj(pb.obj, pb.p1)


def _pi_domain(p: DiagMap, j, b) -> list:
    """Pairs (k, e) with k >= j and e ∈ E(k) over the image of b, topo order."""
    e_diag, b_diag = p.dom, p.cod
    out = []
    for k in p.dom.poset.up(j):
        bk = b_diag.tr_at(j, k, b)
        for e in range(e_diag.size(k)):
            if p.at(k, e) == bk:
                out.append((k, e))
    return out


def _pi_families(p: DiagMap, x: SliceObj, j, b):
    """All compatible families over (j, b), each a value tuple in domain order."""
    xt, a = x.total, x.anchor
    e_diag = p.dom
    domain = _pi_domain(p, j, b)
    fibre = {}
    bound = 1
    for (k, e) in domain:
        fibre[(k, e)] = tuple(i for i in range(xt.size(k)) if a.at(k, i) == e)
        bound *= max(len(fibre[(k, e)]), 1)
        guard(bound, "dependent product")
    pos = {pair: n for n, pair in enumerate(domain)}

    out = []

    def extend(idx, vals):
        if idx == len(domain):
            out.append(tuple(vals))
            return
        k, e = domain[idx]
        forced = None
        for n in range(idx):
            k0, e0 = domain[n]
            if k0 != k and p.dom.poset.lt(k0, k) and e_diag.tr(k0, k)[e0] == e:
                want = xt.tr(k0, k)[vals[n]]
                if forced is None:
                    forced = want
                elif forced != want:
                    return
        options = (forced,) if forced is not None else fibre[(k, e)]
        for v in options:
            if forced is not None and v not in fibre[(k, e)]:
                continue
            vals.append(v)
            extend(idx + 1, vals)
            vals.pop()

    extend(0, [])
    return domain, pos, out


def pi(p: DiagMap, x: SliceObj) -> SliceObj:
    """Dependent product along p (right adjoint to delta).

    Carrier elements are (b, values) pairs; `values` lists one x-element per
    domain pair of `_pi_domain`, in order.
    """
    if x.base != p.dom:
        raise BoundaryError("pi: slice is not anchored at dom p")
    poset = p.dom.poset
    b_diag = p.cod
    elems = {}
    for j in poset.elements:
        row = []
        for b in range(b_diag.size(j)):
            _, _, fams = _pi_families(p, x, j, b)
            row.extend((b, vals) for vals in fams)
        elems[j] = tuple(row)
    trs = {}
    for (j, k) in poset.strict_pairs():
        dom_j = {b: _pi_domain(p, j, b) for b in range(b_diag.size(j))}
        idx = {t: i for i, t in enumerate(elems[k])}
        row = []
        for (b, vals) in elems[j]:
            pos = {pair: n for n, pair in enumerate(dom_j[b])}
            bk = b_diag.tr(j, k)[b]
            sub = tuple(vals[pos[pair]] for pair in _pi_domain(p, k, bk))
            row.append(idx[(bk, sub)])
        trs[(j, k)] = tuple(row)
    obj = Diagram(poset, elems, trs)
    anchor = DiagMap(obj, b_diag,
                     {j: tuple(b for (b, _) in elems[j]) for j in poset.elements})
    return SliceObj(obj, anchor)


def pi_counit(p: DiagMap, x: SliceObj, pix: SliceObj | None = None) -> DiagMap:
    """The evaluation Δ_p Π_p x → x over dom p."""
    px = pix if pix is not None else pi(p, x)
    dpx = delta(p, px)
    poset = p.dom.poset
    comps = {}
    for j in poset.elements:
        row = []
        for (e, fi) in dpx.total.elems[j]:
            b, vals = px.total.elem(j, fi)
            domain = _pi_domain(p, j, b)
            row.append(vals[domain.index((j, e))])
        comps[j] = tuple(row)
    return DiagMap(dpx.total, x.total, comps)


def pi_transpose(p: DiagMap, y: SliceObj, x: SliceObj, g: DiagMap,
                 pix: SliceObj | None = None) -> DiagMap:
    """Adjunct of g: Δ_p y → x over dom p, as a map y → Π_p x over cod p."""
    if y.base != p.cod or x.base != p.dom:
        raise BoundaryError("pi_transpose: wrong anchoring")
    dpy = delta(p, y)
    if g.dom != dpy.total or g.cod != x.total:
        raise BoundaryError("pi_transpose: g is not a map Δ_p y → x")
    if compose(g, x.anchor) != dpy.anchor:
        raise BoundaryError("pi_transpose: g does not live over dom p")
    px = pix if pix is not None else pi(p, x)
    poset = p.dom.poset
    comps = {}
    for j in poset.elements:
        row = []
        for iy in range(y.total.size(j)):
            b = y.anchor.at(j, iy)
            vals = []
            for (k, e) in _pi_domain(p, j, b):
                yk = y.total.tr_at(j, k, iy)
                pair_idx = dpy.total.index(k, (e, yk))
                vals.append(g.at(k, pair_idx))
            row.append(px.total.index(j, (b, tuple(vals))))
        comps[j] = tuple(row)
    return DiagMap(y.total, px.total, comps)


def pi_unit(p: DiagMap, y: SliceObj) -> DiagMap:
    """The unit y → Π_p Δ_p y over cod p."""
    dpy = delta(p, y)
    return pi_transpose(p, y, dpy, identity(dpy.total))


# -- slice hom-sets -----------------------------------------------------------

def _over_allowed(x: SliceObj, y: SliceObj):
    fibres = {}
    for j in y.total.poset.elements:
        fibres[j] = {}
        for i, v in enumerate(y.anchor.components[j]):
            fibres[j].setdefault(v, []).append(i)

    def allowed(j, a):
        return fibres[j].get(x.anchor.at(j, a), ())

    return allowed


def slice_hom_count(x: SliceObj, y: SliceObj) -> int:
    """Number of maps x → y over the common base."""
    if x.base != y.base:
        raise BoundaryError("slice_hom_count: different bases")
    return count_hom(x.total, y.total, allowed=_over_allowed(x, y))


def slice_hom_maps(x: SliceObj, y: SliceObj):
    if x.base != y.base:
        raise BoundaryError("slice_hom_maps: different bases")
    return hom_maps(x.total, y.total, allowed=_over_allowed(x, y))
