"""Negation of a map, dense/closed maps, their factorization, and decidability.

The negation of p: E → B is the distributivity pullback around the initial
map into E and p; concretely its domain consists of the B-points whose
p-fibre stays empty under every transition.  Everything else here (the
dense-closed factorization, closure of subobjects, decidability maps,
distinct-tuple objects) is assembled from that single construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ShapeError
from .diagram import (DiagMap, Diagram, classify_map, compose, identity,
                      image_subobject, is_mono, slice_iso, subdiagram)
from .colimits import coproduct, initial_map
from .dpb import DpbResult, dpb
from .limits import diagonal, fibre_power, pullback


@dataclass(frozen=True)
class NegationResult:
    complement: Diagram   # domain of the negation
    negmap: DiagMap       # complement → B, always mono
    dpb_result: DpbResult


def negate(p: DiagMap) -> NegationResult:
    """Negation of p, computed as the distributivity pullback around 0 → dom p and p."""
    d = dpb(initial_map(p.dom), p)
    res = NegationResult(complement=d.side, negmap=d.right, dpb_result=d)
    assert is_mono(res.negmap)
    assert pullback(p, res.negmap).obj.is_empty()  # disjoint from p
    return res


@dataclass(frozen=True)
class DensityFlags:
    dense: bool
    closed: bool


def classify_density(f: DiagMap) -> DensityFlags:
    """dense iff the negation has empty domain; closed iff ¬¬f ≅ f over the base."""
    neg = negate(f)
    dense = neg.complement.is_empty()
    negneg = negate(neg.negmap)
    closed = slice_iso(f, negneg.negmap) is not None
    return DensityFlags(dense=dense, closed=closed)


def is_dense_mono(f: DiagMap) -> bool:
    return is_mono(f) and negate(f).complement.is_empty()


@dataclass(frozen=True)
class FactorizationResult:
    image: Diagram        # domain of the closed part
    dense_part: DiagMap   # E → image
    closed_part: DiagMap  # image → B, mono


def factorize_dense_closed(p: DiagMap) -> FactorizationResult:
    """Factor p as a dense map followed by a closed mono (the double negation)."""
    neg = negate(p)
    negneg = negate(neg.negmap)
    closed_part = negneg.negmap
    target = closed_part.dom
    comps = {}
    for j in p.dom.poset.elements:
        # each p-image point avoids the negation under every transition,
        # so it lies in the double-negation domain
        lookup = {closed_part.at(j, i): i for i in range(target.size(j))}
        comps[j] = tuple(lookup[p.at(j, i)] for i in range(p.dom.size(j)))
    dense_part = DiagMap(p.dom, target, comps)
    res = FactorizationResult(image=target, dense_part=dense_part,
                              closed_part=closed_part)
    assert compose(res.dense_part, res.closed_part) == p
    return res


# -- subobject calculus -------------------------------------------------------

def sub_leq(a: DiagMap, b: DiagMap) -> DiagMap | None:
    """The factoring mono a → b over the shared codomain, or None."""
    if a.cod != b.cod:
        raise ShapeError("sub_leq: different ambient objects")
    if not (is_mono(a) and is_mono(b)):
        raise ShapeError("sub_leq: arguments must be monos")
    comps = {}
    for j in a.dom.poset.elements:
        lookup = {b.at(j, i): i for i in range(b.dom.size(j))}
        row = []
        for i in range(a.dom.size(j)):
            v = a.at(j, i)
            if v not in lookup:
                return None
            row.append(lookup[v])
        comps[j] = tuple(row)
    return DiagMap(a.dom, b.dom, comps)


def sub_eq(a: DiagMap, b: DiagMap) -> bool:
    """Equality of subobjects: identical pointwise images."""
    return all(set(a.components[j]) == set(b.components[j])
               for j in a.dom.poset.elements)


def sub_intersection(a: DiagMap, b: DiagMap) -> DiagMap:
    """Intersection of two subobjects of X as a mono into X."""
    if a.cod != b.cod:
        raise ShapeError("sub_intersection: different ambient objects")
    keep = {j: sorted(set(a.components[j]) & set(b.components[j]))
            for j in a.cod.poset.elements}
    return subdiagram(a.cod, keep)


def closure(m: DiagMap) -> DiagMap:
    """Closure of a subobject: the double negation, as a mono into X."""
    if not is_mono(m):
        raise ShapeError("closure: argument must be mono")
    return negate(negate(m).negmap).negmap


def neg_contravariant(a: DiagMap, b: DiagMap) -> DiagMap:
    """For subobjects a ≤ b of X, the induced mono ¬B → ¬A over X."""
    if a.cod != b.cod:
        raise ShapeError("neg_contravariant: different ambient objects")
    if not (is_mono(a) and is_mono(b)):
        raise ShapeError("neg_contravariant: arguments must be monos")
    if sub_leq(a, b) is None:
        raise ShapeError("neg_contravariant: no map a → b over the base")
    na, nb = negate(a), negate(b)
    out = sub_leq(nb.negmap, na.negmap)
    assert out is not None  # avoiding b implies avoiding the smaller a
    return out


# -- decidability -------------------------------------------------------------

@dataclass(frozen=True)
class DecidabilityResult:
    map: DiagMap          # A + ¬A → X
    decidable: bool
    negation: NegationResult
    sum: object           # CoproductResult of (A, ¬A)


def decidability(m: DiagMap) -> DecidabilityResult:
    """The copaired map A + ¬A → X of a mono; decidable iff it is iso."""
    if not is_mono(m):
        raise ShapeError("decidability: map is not mono")
    neg = negate(m)
    cop = coproduct([m.dom, neg.complement])
    dmap = cop.copair([m, neg.negmap])
    flags = classify_map(dmap)
    assert flags.mono
    assert is_dense_mono(dmap)
    return DecidabilityResult(map=dmap, decidable=flags.iso, negation=neg, sum=cop)


# -- distinct tuples ----------------------------------------------------------

@dataclass(frozen=True)
class DistinctTuples:
    n: int
    object: Diagram
    inclusion: DiagMap    # into the n-fold fibre power


def distinct_power(p: DiagMap, n: int):
    """Subobject of the n-fold fibre power whose tuples stay pairwise
    distinct under every transition.  For n = 1 this is the whole power;
    for n = 2 it agrees with the negation of the diagonal.

    Returns (FibrePowerResult, inclusion DiagMap).
    """
    if n < 1:
        raise ShapeError("distinct_power: n must be >= 1")
    fp = fibre_power(p, n)
    e = p.dom
    keep = {}
    for j in e.poset.elements:
        sel = []
        for i, t in enumerate(fp.obj.elems[j]):
            ok = True
            for k in e.poset.up(j):
                img = tuple(e.tr_at(j, k, a) for a in t)
                if len(set(img)) != n:
                    ok = False
                    break
            if ok:
                sel.append(i)
        keep[j] = sel
    return fp, subdiagram(fp.obj, keep)


def distinct_tuples(p: DiagMap, n: int) -> DistinctTuples:
    """Object of distinct n-tuples within a p-fibre.

    n = 1 is the negation of the identity into the 1-fold power (empty);
    n >= 2 keeps the tuples that remain injective under all transitions,
    which for pairs is exactly the negation of the diagonal.
    """
    if n < 1:
        raise ShapeError("distinct_tuples: n must be >= 1")
    if n == 1:
        neg = negate(diagonal(p, 1))
        return DistinctTuples(1, neg.complement, neg.negmap)
    fp, incl = distinct_power(p, n)
    res = DistinctTuples(n, incl.dom, incl)
    assert pullback(diagonal(p, n), res.inclusion).obj.is_empty()
    return res
