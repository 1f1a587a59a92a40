"""Finite limits, computed pointwise with canonical tuple carriers.

All constructed carriers are lexicographically ordered tuples of member
indices; mediators look elements up by these tuples, so "the" limit of a
shape is a single deterministic object rather than an iso-class.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BoundaryError, ShapeError, guard
from .diagram import Diagram, DiagMap
from .poset import FinPoset


def terminal(poset: FinPoset) -> Diagram:
    """All-singleton diagram."""
    elems = {j: (0,) for j in poset.elements}
    trs = {pair: (0,) for pair in poset.strict_pairs()}
    return Diagram(poset, elems, trs)


def bang(x: Diagram, one: Diagram | None = None) -> DiagMap:
    """The unique map from x to an all-singleton diagram."""
    tgt = one if one is not None else terminal(x.poset)
    if any(tgt.size(j) != 1 for j in x.poset.elements):
        raise ShapeError("bang: target is not all-singleton")
    return DiagMap(x, tgt, {j: (0,) * x.size(j) for j in x.poset.elements})


@dataclass(frozen=True)
class ProductResult:
    obj: Diagram
    projections: tuple

    def mediate(self, legs) -> DiagMap:
        legs = tuple(legs)
        if len(legs) != len(self.projections):
            raise ShapeError("mediate: wrong number of legs")
        if legs:
            q = legs[0].dom
            if any(l.dom != q for l in legs):
                raise ShapeError("mediate: legs have different domains")
        else:
            raise ShapeError("mediate: empty product needs bang instead")
        comps = {}
        for j in q.poset.elements:
            comps[j] = tuple(
                self.obj.index(j, tuple(l.at(j, i) for l in legs))
                for i in range(q.size(j)))
        return DiagMap(q, self.obj, comps)


def product(factors) -> ProductResult:
    factors = tuple(factors)
    if not factors:
        raise ShapeError("product: use terminal() for the empty product")
    poset = factors[0].poset
    if any(f.poset != poset for f in factors):
        raise BoundaryError("product: factors on different posets")
    elems, trs = {}, {}
    for j in poset.elements:
        n = 1
        for f in factors:
            n *= f.size(j)
        guard(n, "product")
        elems[j] = tuple(itertools.product(*(range(f.size(j)) for f in factors)))
    for (j, k) in poset.strict_pairs():
        idx = {t: i for i, t in enumerate(elems[k])}
        trs[(j, k)] = tuple(
            idx[tuple(f.tr(j, k)[t[a]] for a, f in enumerate(factors))]
            for t in elems[j])
    obj = Diagram(poset, elems, trs)
    projs = []
    for a, f in enumerate(factors):
        comps = {j: tuple(t[a] for t in elems[j]) for j in poset.elements}
        projs.append(DiagMap(obj, f, comps))
    return ProductResult(obj, tuple(projs))


@dataclass(frozen=True)
class PullbackResult:
    obj: Diagram
    p1: DiagMap
    p2: DiagMap

    def mediate(self, leg1: DiagMap, leg2: DiagMap) -> DiagMap:
        if leg1.dom != leg2.dom:
            raise ShapeError("mediate: legs have different domains")
        comps = {}
        for j in leg1.dom.poset.elements:
            row = []
            for i in range(leg1.dom.size(j)):
                pair = (leg1.at(j, i), leg2.at(j, i))
                try:
                    row.append(self.obj.index(j, pair))
                except KeyError:
                    raise ShapeError("mediate: legs are not a cone over the cospan")
            comps[j] = tuple(row)
        return DiagMap(leg1.dom, self.obj, comps)


def pullback(f: DiagMap, g: DiagMap) -> PullbackResult:
    """Pullback of the cospan f: X→Z ← Y :g, carrier = matching index pairs."""
    if f.cod != g.cod:
        raise BoundaryError("pullback: maps have different codomains")
    x, y = f.dom, g.dom
    poset = x.poset
    elems, trs = {}, {}
    for j in poset.elements:
        guard(x.size(j) * y.size(j), "pullback")
        elems[j] = tuple((a, b)
                         for a in range(x.size(j))
                         for b in range(y.size(j))
                         if f.at(j, a) == g.at(j, b))
    for (j, k) in poset.strict_pairs():
        idx = {t: i for i, t in enumerate(elems[k])}
        trs[(j, k)] = tuple(idx[(x.tr(j, k)[a], y.tr(j, k)[b])] for (a, b) in elems[j])
    obj = Diagram(poset, elems, trs)
    c1 = {j: tuple(a for (a, _) in elems[j]) for j in poset.elements}
    c2 = {j: tuple(b for (_, b) in elems[j]) for j in poset.elements}
    return PullbackResult(obj, DiagMap(obj, x, c1), DiagMap(obj, y, c2))


def equalizer(f: DiagMap, g: DiagMap) -> DiagMap:
    """Inclusion of the subdiagram where f and g agree."""
    if f.dom != g.dom or f.cod != g.cod:
        raise BoundaryError("equalizer: maps are not parallel")
    from .diagram import subdiagram
    keep = {j: [i for i in range(f.dom.size(j)) if f.at(j, i) == g.at(j, i)]
            for j in f.dom.poset.elements}
    return subdiagram(f.dom, keep)


@dataclass(frozen=True)
class FibrePowerResult:
    """The n-fold fibre power of p: E→B, with anchor to B and n projections."""
    n: int
    obj: Diagram
    anchor: DiagMap
    projections: tuple

    def mediate(self, legs) -> DiagMap:
        legs = tuple(legs)
        if len(legs) != self.n:
            raise ShapeError("mediate: expected one leg per projection")
        q = legs[0].dom
        comps = {}
        for j in q.poset.elements:
            row = []
            for i in range(q.size(j)):
                t = tuple(l.at(j, i) for l in legs)
                try:
                    row.append(self.obj.index(j, t))
                except KeyError:
                    raise ShapeError("mediate: legs do not share a fibre")
            comps[j] = tuple(row)
        return DiagMap(q, self.obj, comps)


def fibre_power(p: DiagMap, n: int) -> FibrePowerResult:
    """n-tuples of E-elements in a common p-fibre; n = 0 gives the base."""
    if n < 0:
        raise ShapeError("fibre_power: n must be >= 0")
    e, b = p.dom, p.cod
    poset = e.poset
    elems, trs = {}, {}
    if n == 0:
        for j in poset.elements:
            elems[j] = tuple((i,) for i in range(b.size(j)))
        for (j, k) in poset.strict_pairs():
            trs[(j, k)] = tuple(b.tr(j, k)[t[0]] for t in elems[j])
        obj = Diagram(poset, elems, trs)
        anchor = DiagMap(obj, b, {j: tuple(t[0] for t in elems[j]) for j in poset.elements})
        return FibrePowerResult(0, obj, anchor, ())
    for j in poset.elements:
        guard(max(e.size(j), 1) ** n, "fibre power")
        elems[j] = tuple(t for t in itertools.product(range(e.size(j)), repeat=n)
                         if len({p.at(j, a) for a in t}) <= 1)
    for (j, k) in poset.strict_pairs():
        idx = {t: i for i, t in enumerate(elems[k])}
        trs[(j, k)] = tuple(idx[tuple(e.tr(j, k)[a] for a in t)] for t in elems[j])
    obj = Diagram(poset, elems, trs)
    anchor = DiagMap(obj, b, {j: tuple(p.at(j, t[0]) for t in elems[j])
                              for j in poset.elements})
    projs = tuple(
        DiagMap(obj, e, {j: tuple(t[a] for t in elems[j]) for j in poset.elements})
        for a in range(n))
    return FibrePowerResult(n, obj, anchor, projs)


def diagonal(p: DiagMap, n: int = 2) -> DiagMap:
    """The n-diagonal E → E^{×n} over p (mediator of n identity legs)."""
    from .diagram import identity
    fp = fibre_power(p, n)
    return fp.mediate([identity(p.dom)] * n)


@dataclass(frozen=True)
class LimitResult:
    obj: Diagram
    projections: tuple

    def mediate(self, legs) -> DiagMap:
        legs = tuple(legs)
        if len(legs) != len(self.projections):
            raise ShapeError("mediate: wrong number of legs")
        q = legs[0].dom
        comps = {}
        for j in q.poset.elements:
            row = []
            for i in range(q.size(j)):
                t = tuple(l.at(j, i) for l in legs)
                try:
                    row.append(self.obj.index(j, t))
                except KeyError:
                    raise ShapeError("mediate: legs are not a cone")
            comps[j] = tuple(row)
        return DiagMap(q, self.obj, comps)


def finite_limit(objects, arrows=()) -> LimitResult:
    """Limit of a finite diagram of DiagMaps.

    `objects` is a sequence of Diagrams; `arrows` is a sequence of
    (src_index, dst_index, DiagMap) triples.  The carrier at j is the set of
    tuples (one index per object) satisfying every arrow equation, in
    lexicographic order.
    """
    objects = tuple(objects)
    if not objects:
        raise ShapeError("finite_limit: use terminal() for the empty shape")
    poset = objects[0].poset
    for s, d, m in arrows:
        if m.dom != objects[s] or m.cod != objects[d]:
            raise ShapeError("finite_limit: ill-typed arrow")
    elems, trs = {}, {}
    for j in poset.elements:
        n = 1
        for o in objects:
            n *= o.size(j)
        guard(n, "finite limit")
        elems[j] = tuple(
            t for t in itertools.product(*(range(o.size(j)) for o in objects))
            if all(m.at(j, t[s]) == t[d] for s, d, m in arrows))
    for (j, k) in poset.strict_pairs():
        idx = {t: i for i, t in enumerate(elems[k])}
        trs[(j, k)] = tuple(
            idx[tuple(o.tr(j, k)[t[a]] for a, o in enumerate(objects))]
            for t in elems[j])
    obj = Diagram(poset, elems, trs)
    projs = tuple(
        DiagMap(obj, o, {j: tuple(t[a] for t in elems[j]) for j in poset.elements})
        for a, o in enumerate(objects))
    return LimitResult(obj, projs)
