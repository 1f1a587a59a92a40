import pytest

from polyfun import (DiagMap, FinPoset, ShapeError, bang, classify_map,
                     compose, count_hom, diagram_iso, from_sizes, identity,
                     image_subobject, subdiagram, terminal)
from polyfun.colimits import initial, initial_map
from polyfun.diagram import hom_maps, invert_iso


def test_functoriality_checked():
    c = FinPoset.chain(3)
    with pytest.raises(ShapeError):
        from_sizes(c, {"0": 1, "1": 1, "2": 2},
                   {("0", "1"): (0,), ("1", "2"): (0,), ("0", "2"): (1,)})


def test_naturality_checked(sp):
    x = from_sizes(sp, {"0": 2, "1": 2}, {("0", "1"): (0, 1)})
    y = from_sizes(sp, {"0": 2, "1": 2}, {("0", "1"): (1, 0)})
    with pytest.raises(ShapeError):
        DiagMap(x, y, {"0": (0, 1), "1": (0, 1)})


def test_compose_identity(model_a):
    assert compose(model_a, identity(model_a.cod)) == model_a
    assert compose(identity(model_a.dom), model_a) == model_a


def test_compose_pointwise(model_a):
    q = bang(model_a.cod)
    assert compose(model_a, q) == bang(model_a.dom, q.cod)


def test_classify(model_a):
    flags = classify_map(model_a)
    assert not flags.mono and not flags.epi and not flags.iso
    idf = classify_map(identity(model_a.dom))
    assert idf.mono and idf.epi and idf.iso


def test_invert_iso(pt):
    x = from_sizes(pt, {"*": 3}, {})
    f = DiagMap(x, x, {"*": (2, 0, 1)})
    g = invert_iso(f)
    assert compose(f, g) == identity(x)
    assert compose(g, f) == identity(x)


def test_strict_initial(pt, sp):
    # any map into the all-empty diagram has empty domain
    for poset in (pt, sp):
        zero = initial(poset)
        x = from_sizes(poset, {j: 1 for j in poset.elements},
                       {pr: (0,) for pr in poset.strict_pairs()})
        assert count_hom(x, zero) == 0
        assert count_hom(zero, zero) == 1


def test_image_subobject(model_a):
    incl = image_subobject(model_a)
    assert classify_map(incl).mono
    assert incl.dom.size("*") == 2


def test_subdiagram_rejects_open_subset(sp):
    x = from_sizes(sp, {"0": 2, "1": 2}, {("0", "1"): (0, 1)})
    with pytest.raises(ShapeError):
        subdiagram(x, {"0": [0], "1": []})


def test_hom_count_sierpinski(sp):
    # maps (1→1) → (1→1) : exactly one; maps (2 merging) → (1→1): one
    x = from_sizes(sp, {"0": 1, "1": 1}, {("0", "1"): (0,)})
    assert count_hom(x, x) == 1
    m = from_sizes(sp, {"0": 2, "1": 1}, {("0", "1"): (0, 0)})
    assert count_hom(m, x) == 1
    assert count_hom(x, m) == 2  # the point at level 0 may go to a or b


def test_diagram_iso_respects_transitions(sp):
    x = from_sizes(sp, {"0": 2, "1": 2}, {("0", "1"): (0, 1)})
    y = from_sizes(sp, {"0": 2, "1": 2}, {("0", "1"): (0, 0)})
    assert diagram_iso(x, y) is None
    assert diagram_iso(x, x) is not None
