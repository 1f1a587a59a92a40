"""Initial object and finite coproducts (the only colimits needed here)."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoundaryError, ShapeError, guard
from .diagram import Diagram, DiagMap, classify_map, subdiagram
from .poset import FinPoset


def initial(poset: FinPoset) -> Diagram:
    """All-empty diagram."""
    return Diagram(poset, {j: () for j in poset.elements},
                   {pair: () for pair in poset.strict_pairs()})


def initial_map(x: Diagram) -> DiagMap:
    return DiagMap(initial(x.poset), x, {j: () for j in x.poset.elements})


@dataclass(frozen=True)
class CoproductResult:
    obj: Diagram
    injections: tuple

    @property
    def arity(self) -> int:
        return len(self.injections)

    def copair(self, legs) -> DiagMap:
        legs = tuple(legs)
        if len(legs) != self.arity:
            raise ShapeError("copair: wrong number of legs")
        if legs and any(l.cod != legs[0].cod for l in legs):
            raise ShapeError("copair: legs have different codomains")
        cod = legs[0].cod
        comps = {}
        for j in self.obj.poset.elements:
            comps[j] = tuple(legs[tag].at(j, i) for (tag, i) in self.obj.elems[j])
        return DiagMap(self.obj, cod, comps)


def coproduct(summands) -> CoproductResult:
    """Tagged disjoint union, summand order preserved; carrier (tag, index)."""
    summands = tuple(summands)
    if not summands:
        raise ShapeError("coproduct: use initial() for the empty coproduct")
    poset = summands[0].poset
    if any(s.poset != poset for s in summands):
        raise BoundaryError("coproduct: summands on different posets")
    elems, trs = {}, {}
    for j in poset.elements:
        guard(sum(s.size(j) for s in summands), "coproduct")
        elems[j] = tuple((tag, i)
                         for tag, s in enumerate(summands)
                         for i in range(s.size(j)))
    for (j, k) in poset.strict_pairs():
        idx = {t: i for i, t in enumerate(elems[k])}
        trs[(j, k)] = tuple(idx[(tag, summands[tag].tr(j, k)[i])]
                            for (tag, i) in elems[j])
    obj = Diagram(poset, elems, trs)
    injs = []
    for tag, s in enumerate(summands):
        comps = {j: tuple(obj.index(j, (tag, i)) for i in range(s.size(j)))
                 for j in poset.elements}
        injs.append(DiagMap(s, obj, comps))
    return CoproductResult(obj, tuple(injs))


def copower(n: int, x: Diagram) -> CoproductResult:
    if n < 0:
        raise ShapeError("copower: n must be >= 0")
    if n == 0:
        return CoproductResult(initial(x.poset), ())
    return coproduct([x] * n)


def codiagonal(cop: CoproductResult, x: Diagram) -> DiagMap:
    """The fold map n·x → x of a copower."""
    from .diagram import identity
    if cop.arity == 0:
        return initial_map(x)
    return cop.copair([identity(x)] * cop.arity)


@dataclass(frozen=True)
class DecomposeResult:
    parts: tuple          # restriction of f over each summand
    part_inclusions: tuple  # dom(part) -> dom(f)
    comparison: DiagMap   # sum of part domains -> dom(f), always iso


def decompose_over_sum(f: DiagMap, cop: CoproductResult) -> DecomposeResult:
    """Split f: M → X₁+…+Xₙ into its pullbacks along the injections.

    Returns the restrictions fᵢ: Mᵢ → Xᵢ together with the canonical
    comparison iso M₁+…+Mₙ ≅ M.
    """
    if f.cod != cop.obj:
        raise BoundaryError("decompose_over_sum: codomain is not the given sum")
    poset = f.dom.poset
    parts, incls = [], []
    for tag, inj in enumerate(cop.injections):
        keep = {j: [i for i in range(f.dom.size(j))
                    if cop.obj.elem(j, f.at(j, i))[0] == tag]
                for j in poset.elements}
        incl = subdiagram(f.dom, keep)
        comps = {j: tuple(cop.obj.elem(j, f.at(j, incl.at(j, i)))[1]
                          for i in range(incl.dom.size(j)))
                 for j in poset.elements}
        parts.append(DiagMap(incl.dom, inj.dom, comps))
        incls.append(incl)
    if parts:
        partsum = coproduct([p.dom for p in parts])
        comparison = partsum.copair(incls)
    else:  # pragma: no cover - coproduct() refuses the empty case
        comparison = initial_map(f.dom)
    assert classify_map(comparison).iso
    return DecomposeResult(tuple(parts), tuple(incls), comparison)
