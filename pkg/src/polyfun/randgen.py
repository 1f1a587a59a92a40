"""Seeded random instances for the law batteries.

Random posets are forests (each element has at most one lower cover), so a
diagram is determined by free choices on covering pairs; no path-consistency
conflicts can arise.  Maps into a fixed base are generated fibrewise, which
is natural by construction; maps between two fixed diagrams are sampled by
the same forced-extension scheme the hom enumerator uses.
"""

from __future__ import annotations

import random

from .diagram import DiagMap, Diagram, from_sizes
from .poset import FinPoset
from .slices import SliceObj


def rand_poset(rng: random.Random, max_elems: int = 3) -> FinPoset:
    n = rng.randint(1, max_elems)
    names = [str(i) for i in range(n)]
    leq = {(a, a) for a in names}
    # forest: element i may attach below a single later element
    parent = {}
    for i in range(n):
        if i + 1 < n and rng.random() < 0.6:
            parent[i] = rng.randint(i + 1, n - 1)
    for i in range(n):
        j = i
        while j in parent:
            j = parent[j]
            leq.add((names[i], names[j]))
    return FinPoset(names, leq)


def rand_diagram(rng: random.Random, poset: FinPoset, max_card: int = 3,
                 min_card: int = 0) -> Diagram:
    sizes = {j: rng.randint(min_card, max_card) for j in poset.elements}
    # a level with an empty level above it must itself be empty
    for j in reversed(poset.topo):
        if any(sizes[k] == 0 for k in poset.up(j) if k != j):
            sizes[j] = 0
    trs = {}
    for (j, k) in poset.covers():
        trs[(j, k)] = tuple(rng.randrange(sizes[k]) for _ in range(sizes[j]))
    full = dict(trs)
    for (j, k) in poset.strict_pairs():
        if (j, k) in full:
            continue
        for m in poset.elements:
            if poset.lt(j, m) and poset.lt(m, k) and (j, m) in full and (m, k) in full:
                full[(j, k)] = tuple(full[(m, k)][v] for v in full[(j, m)])
                break
    return from_sizes(poset, sizes, full)


def rand_map_into(rng: random.Random, base: Diagram, max_fibre: int = 3,
                  min_fibre: int = 0) -> DiagMap:
    """A random map with codomain `base`, built fibrewise (always natural)."""
    poset = base.poset
    fibres = {j: [rng.randint(min_fibre, max_fibre) for _ in range(base.size(j))]
              for j in poset.elements}
    # a fibre whose image fibre at some higher level is empty must be empty
    for j in reversed(poset.topo):
        for b in range(base.size(j)):
            if any(fibres[k][base.tr_at(j, k, b)] == 0
                   for k in poset.up(j) if k != j):
                fibres[j][b] = 0
    elems = {j: tuple((b, i) for b in range(base.size(j))
                      for i in range(fibres[j][b]))
             for j in poset.elements}
    trs = {}
    for (j, k) in poset.covers():
        idx = {t: i for i, t in enumerate(elems[k])}
        row = []
        for (b, _) in elems[j]:
            bk = base.tr(j, k)[b]
            row.append(idx[(bk, rng.randrange(fibres[k][bk]))])
        trs[(j, k)] = tuple(row)
    full = dict(trs)
    for (j, k) in poset.strict_pairs():
        if (j, k) in full:
            continue
        for m in poset.elements:
            if poset.lt(j, m) and poset.lt(m, k) and (j, m) in full and (m, k) in full:
                full[(j, k)] = tuple(full[(m, k)][v] for v in full[(j, m)])
                break
    total = Diagram(poset, elems, full)
    comps = {j: tuple(b for (b, _) in elems[j]) for j in poset.elements}
    return DiagMap(total, base, comps)


def rand_map_between(rng: random.Random, x: Diagram, y: Diagram,
                     tries: int = 50) -> DiagMap | None:
    """A random natural map x → y, or None if none exists."""
    poset = x.poset
    order = poset.topo
    for _ in range(tries):
        chosen = {}
        dead = False
        for idx, j in enumerate(order):
            forced = {}
            for i in order[:idx]:
                if not poset.lt(i, j):
                    continue
                for a in range(x.size(i)):
                    tgt = y.tr(i, j)[chosen[i][a]]
                    prev = forced.setdefault(x.tr(i, j)[a], tgt)
                    if prev != tgt:
                        dead = True
            if dead:
                break
            row = []
            for a in range(x.size(j)):
                if a in forced:
                    row.append(forced[a])
                elif y.size(j):
                    row.append(rng.randrange(y.size(j)))
                else:
                    dead = True
                    break
            if dead:
                break
            chosen[j] = tuple(row)
        if not dead:
            return DiagMap(x, y, chosen)
    return None


def rand_slice(rng: random.Random, base: Diagram, max_fibre: int = 2) -> SliceObj:
    anchor = rand_map_into(rng, base, max_fibre=max_fibre)
    return SliceObj(anchor.dom, anchor)


def rand_subobject(rng: random.Random, x: Diagram) -> DiagMap:
    """Random transition-closed subset of x, as an inclusion."""
    from .diagram import subdiagram
    poset = x.poset
    keep = {j: set() for j in poset.elements}
    for j in poset.topo:
        forced = set(keep[j])
        for i in poset.topo:
            if poset.lt(i, j):
                forced.update(x.tr(i, j)[a] for a in keep[i])
        extra = {a for a in range(x.size(j)) if rng.random() < 0.5}
        keep[j] = forced | extra
    return subdiagram(x, {j: sorted(keep[j]) for j in poset.elements})


def rand_dense_mono(rng: random.Random, x: Diagram) -> DiagMap:
    """Random dense subobject: full at maximal elements, random and
    transition-closed below."""
    from .diagram import subdiagram
    poset = x.poset
    maximal = set(poset.maximal())
    keep = {j: set() for j in poset.elements}
    for j in poset.topo:
        forced = set()
        for i in poset.topo:
            if poset.lt(i, j):
                forced.update(x.tr(i, j)[a] for a in keep[i])
        if j in maximal:
            keep[j] = set(range(x.size(j)))
        else:
            extra = {a for a in range(x.size(j)) if rng.random() < 0.4}
            keep[j] = forced | extra
    return subdiagram(x, {j: sorted(keep[j]) for j in poset.elements})


def rand_dense_map(rng: random.Random, y: Diagram) -> DiagMap:
    """Random dense (not necessarily monic) map into y."""
    w = rand_dense_mono(rng, y)
    cover = rand_map_into(rng, w.dom, max_fibre=2, min_fibre=1)
    from .diagram import compose
    return compose(cover, w)


def rand_closed_mono(rng: random.Random, x: Diagram) -> DiagMap:
    """Random closed subobject: the closure of a random subobject."""
    from .negation import closure
    return closure(rand_subobject(rng, x))


def rand_one_var_poly(rng: random.Random, max_b: int = 3, max_fibre: int = 3):
    """Random one-variable polynomial on the one-element poset."""
    from .limits import terminal
    from .poly import poly_from_map
    pt = FinPoset.point()
    b = from_sizes(pt, {"*": rng.randint(0, max_b)}, {})
    p = rand_map_into(rng, b, max_fibre=max_fibre)
    return poly_from_map(p)


def rand_poly_on(rng: random.Random, poset: FinPoset, max_b: int = 2,
                 max_fibre: int = 2):
    """Random one-variable polynomial on an arbitrary poset."""
    from .poly import poly_from_map
    b = rand_diagram(rng, poset, max_card=max_b)
    p = rand_map_into(rng, b, max_fibre=max_fibre)
    return poly_from_map(p)
