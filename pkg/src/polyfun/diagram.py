"""Finite-set-valued diagrams on a finite poset and their natural maps.

A Diagram assigns to every poset element a finite carrier (a tuple of
hashable element witnesses; the canonical index of an element is its
position) and to every strict pair j < k a transition function given as a
tuple of codomain indices.  Functoriality is checked at construction.
A DiagMap is a family of component functions checked for naturality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BoundaryError, ShapeError
from .poset import FinPoset


def _freeze_components(poset, comps, sizes):
    out = {}
    for j in poset.elements:
        raw = tuple(comps.get(j, ()))
        if len(raw) != sizes[j]:
            raise ShapeError(f"component at {j!r} has length {len(raw)}, expected {sizes[j]}")
        out[j] = raw
    return out


@dataclass(frozen=True)
class Diagram:
    poset: FinPoset
    elems: dict
    transitions: dict

    def __init__(self, poset, elems, transitions):
        object.__setattr__(self, "poset", poset)
        object.__setattr__(self, "elems",
                           {j: tuple(elems.get(j, ())) for j in poset.elements})
        trs = {}
        for (j, k) in poset.strict_pairs():
            if (j, k) not in transitions:
                raise ShapeError(f"missing transition for {j!r}<={k!r}")
            trs[(j, k)] = tuple(transitions[(j, k)])
        object.__setattr__(self, "transitions", trs)
        self._validate()
        index = {j: {obj: i for i, obj in enumerate(self.elems[j])}
                 for j in poset.elements}
        object.__setattr__(self, "_index", index)

    def _validate(self) -> None:
        for (j, k), tr in self.transitions.items():
            if len(tr) != self.size(j):
                raise ShapeError(f"transition {j!r}<={k!r} has wrong length")
            if any(not (0 <= v < self.size(k)) for v in tr):
                raise ShapeError(f"transition {j!r}<={k!r} has out-of-range value")
        for j in self.poset.elements:
            if len(set(self.elems[j])) != len(self.elems[j]):
                raise ShapeError(f"duplicate element witness at {j!r}")
        # composites must agree with the stored transition for every path
        for (j, k) in self.poset.strict_pairs():
            for m in self.poset.elements:
                if self.poset.lt(j, m) and self.poset.lt(m, k):
                    jm, mk, jk = self.transitions[(j, m)], self.transitions[(m, k)], self.transitions[(j, k)]
                    if tuple(mk[v] for v in jm) != jk:
                        raise ShapeError(
                            f"functoriality fails: {j!r}<={m!r}<={k!r} composite differs from {j!r}<={k!r}")

    # -- access -------------------------------------------------------------

    def size(self, j) -> int:
        return len(self.elems[j])

    def total_size(self) -> int:
        return sum(self.size(j) for j in self.poset.elements)

    def is_empty(self) -> bool:
        return self.total_size() == 0

    def tr(self, j, k) -> tuple:
        if j == k:
            return tuple(range(self.size(j)))
        return self.transitions[(j, k)]

    def tr_at(self, j, k, i) -> int:
        return i if j == k else self.transitions[(j, k)][i]

    def elem(self, j, i):
        return self.elems[j][i]

    def index(self, j, obj) -> int:
        return self._index[j][obj]

    def __eq__(self, other):
        return (isinstance(other, Diagram)
                and self.poset == other.poset
                and self.elems == other.elems
                and self.transitions == other.transitions)

    def __repr__(self):
        sizes = ",".join(f"{j}:{self.size(j)}" for j in self.poset.elements)
        return f"Diagram({sizes})"


def from_sizes(poset: FinPoset, sizes, transitions) -> Diagram:
    """Diagram whose carrier at j is the index range 0..sizes[j]-1."""
    elems = {j: tuple(range(sizes.get(j, 0))) for j in poset.elements}
    return Diagram(poset, elems, transitions)


@dataclass(frozen=True)
class DiagMap:
    dom: Diagram
    cod: Diagram
    components: dict

    def __init__(self, dom, cod, components):
        if dom.poset != cod.poset:
            raise BoundaryError("dom and cod live on different posets")
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        sizes = {j: dom.size(j) for j in dom.poset.elements}
        object.__setattr__(self, "components",
                           _freeze_components(dom.poset, components, sizes))
        self._validate()

    def _validate(self) -> None:
        for j in self.dom.poset.elements:
            for v in self.components[j]:
                if not (0 <= v < self.cod.size(j)):
                    raise ShapeError(f"component at {j!r} maps out of range")
        for (j, k) in self.dom.poset.strict_pairs():
            fj, fk = self.components[j], self.components[k]
            dt, ct = self.dom.tr(j, k), self.cod.tr(j, k)
            for x in range(self.dom.size(j)):
                if ct[fj[x]] != fk[dt[x]]:
                    raise ShapeError(
                        f"naturality fails at {j!r}<={k!r}, element {x}")

    def at(self, j, i) -> int:
        return self.components[j][i]

    def comp(self, j) -> tuple:
        return self.components[j]

    def then(self, other: "DiagMap") -> "DiagMap":
        return compose(self, other)

    def __eq__(self, other):
        return (isinstance(other, DiagMap)
                and self.dom == other.dom and self.cod == other.cod
                and self.components == other.components)

    def __repr__(self):
        return f"DiagMap({self.dom!r} -> {self.cod!r})"


def identity(x: Diagram) -> DiagMap:
    return DiagMap(x, x, {j: tuple(range(x.size(j))) for j in x.poset.elements})


def compose(f: DiagMap, g: DiagMap) -> DiagMap:
    """Composite g∘f; arguments in diagrammatic order (f first, then g)."""
    if f.cod != g.dom:
        raise BoundaryError("compose: f.cod differs from g.dom")
    comps = {j: tuple(g.components[j][v] for v in f.components[j])
             for j in f.dom.poset.elements}
    return DiagMap(f.dom, g.cod, comps)


def invert_iso(f: DiagMap) -> DiagMap:
    flags = classify_map(f)
    if not flags.iso:
        raise ShapeError("invert_iso: map is not an isomorphism")
    comps = {}
    for j in f.dom.poset.elements:
        inv = [0] * f.cod.size(j)
        for x, y in enumerate(f.components[j]):
            inv[y] = x
        comps[j] = tuple(inv)
    return DiagMap(f.cod, f.dom, comps)


@dataclass(frozen=True)
class MapFlags:
    mono: bool
    epi: bool
    iso: bool


def classify_map(f: DiagMap) -> MapFlags:
    """Pointwise classification: mono iff every component is injective,
    epi iff every component is surjective, iso iff both."""
    mono = epi = True
    for j in f.dom.poset.elements:
        comp = f.components[j]
        if len(set(comp)) != len(comp):
            mono = False
        if len(set(comp)) != f.cod.size(j):
            epi = False
    return MapFlags(mono, epi, mono and epi)


def is_mono(f: DiagMap) -> bool:
    return classify_map(f).mono


# -- subdiagrams and images -------------------------------------------------

def subdiagram(x: Diagram, keep) -> DiagMap:
    """Inclusion of the subdiagram with carriers keep[j] (index lists).

    The kept subsets must be closed under the transitions of x.
    """
    sel = {j: tuple(sorted(set(keep.get(j, ())))) for j in x.poset.elements}
    pos = {j: {i: n for n, i in enumerate(sel[j])} for j in x.poset.elements}
    trs = {}
    for (j, k) in x.poset.strict_pairs():
        row = []
        for i in sel[j]:
            img = x.tr(j, k)[i]
            if img not in pos[k]:
                raise ShapeError(f"subset not transition-closed at {j!r}<={k!r}")
            row.append(pos[k][img])
        trs[(j, k)] = tuple(row)
    sub = Diagram(x.poset, {j: tuple(x.elem(j, i) for i in sel[j]) for j in x.poset.elements}, trs)
    return DiagMap(sub, x, {j: sel[j] for j in x.poset.elements})


def image_subobject(f: DiagMap) -> DiagMap:
    """The image of f as an inclusion into f.cod."""
    keep = {j: sorted(set(f.components[j])) for j in f.dom.poset.elements}
    return subdiagram(f.cod, keep)


# -- hom-set enumeration ------------------------------------------------------

def _hom_components(x: Diagram, y: Diagram, allowed=None, bijective=False):
    """Yield component dicts of natural maps x -> y.

    Processes poset elements in topo order; values at j forced through
    transitions from already-chosen lower elements are propagated, the rest
    range over the codomain (or `allowed(j, i)` when given).
    """
    poset = x.poset
    order = poset.topo
    if bijective and any(x.size(j) != y.size(j) for j in order):
        return

    def extend(idx, chosen):
        if idx == len(order):
            yield dict(chosen)
            return
        j = order[idx]
        forced = {}
        for i in order[:idx]:
            if not poset.lt(i, j):
                continue
            xt, yt, ci = x.tr(i, j), y.tr(i, j), chosen[i]
            for a in range(x.size(i)):
                tgt = yt[ci[a]]
                prev = forced.setdefault(xt[a], tgt)
                if prev != tgt:
                    return
        slots = []
        for a in range(x.size(j)):
            if a in forced:
                opts = (forced[a],)
                if allowed is not None and forced[a] not in allowed(j, a):
                    opts = ()
            elif allowed is not None:
                opts = tuple(allowed(j, a))
            else:
                opts = tuple(range(y.size(j)))
            slots.append(opts)
        for combo in itertools.product(*slots):
            if bijective and len(set(combo)) != x.size(j):
                continue
            chosen[j] = combo
            yield from extend(idx + 1, chosen)
            del chosen[j]

    yield from extend(0, {})


def hom_maps(x: Diagram, y: Diagram, allowed=None):
    for comps in _hom_components(x, y, allowed=allowed):
        yield DiagMap(x, y, comps)


def count_hom(x: Diagram, y: Diagram, allowed=None) -> int:
    return sum(1 for _ in _hom_components(x, y, allowed=allowed))


def iso_maps(x: Diagram, y: Diagram, allowed=None):
    for comps in _hom_components(x, y, allowed=allowed, bijective=True):
        yield DiagMap(x, y, comps)


def diagram_iso(x: Diagram, y: Diagram):
    """A natural isomorphism x -> y, or None."""
    for f in iso_maps(x, y):
        return f
    return None


def slice_iso(f: DiagMap, g: DiagMap):
    """An iso a: dom f -> dom g with g∘a = f, or None (iso search over a base)."""
    if f.cod != g.cod:
        raise BoundaryError("slice_iso: different bases")
    fibres = {}
    for j in g.dom.poset.elements:
        fibres[j] = {}
        for i, v in enumerate(g.components[j]):
            fibres[j].setdefault(v, []).append(i)

    def allowed(j, a):
        return fibres[j].get(f.components[j][a], ())

    for a in iso_maps(f.dom, g.dom, allowed=allowed):
        return a
    return None
