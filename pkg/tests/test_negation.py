import random

import pytest

from polyfun import (DiagMap, ShapeError, classify_density, classify_map,
                     closure, compose, decidability, diagonal,
                     distinct_tuples, factorize_dense_closed, from_sizes,
                     identity, image_subobject, initial, is_dense_mono,
                     neg_contravariant, negate, pullback, slice_iso, sub_eq,
                     sub_intersection, sub_leq, subdiagram)
from polyfun.colimits import copower
from polyfun.negation import distinct_power
from polyfun.randgen import (rand_dense_map, rand_diagram, rand_dense_mono,
                             rand_map_into, rand_poset, rand_subobject)


def test_negate_model_a(model_a):
    res = negate(model_a)
    assert res.complement.size("*") == 1
    assert res.negmap.components["*"] == (2,)


def test_negate_iso(model_a):
    res = negate(identity(model_a.cod))
    assert res.complement.is_empty()


def test_negate_sierpinski(sierpinski_w):
    res = negate(sierpinski_w)
    assert res.complement.is_empty()


def test_negation_disjoint_randomized():
    rng = random.Random(11)
    for _ in range(30):
        poset = rand_poset(rng)
        b = rand_diagram(rng, poset, max_card=2)
        p = rand_map_into(rng, b, max_fibre=2)
        res = negate(p)
        assert classify_map(res.negmap).mono
        assert pullback(p, res.negmap).obj.is_empty()


def test_triple_negation_randomized():
    rng = random.Random(12)
    for _ in range(30):
        poset = rand_poset(rng)
        b = rand_diagram(rng, poset, max_card=2)
        p = rand_map_into(rng, b, max_fibre=2)
        np_ = negate(p).negmap
        nnnp = negate(negate(np_).negmap).negmap
        assert slice_iso(np_, nnnp) is not None


def test_density_sierpinski(sierpinski_w):
    flags = classify_density(sierpinski_w)
    assert flags.dense and not flags.closed


def test_density_iso(model_a):
    flags = classify_density(identity(model_a.dom))
    assert flags.dense and flags.closed


def test_density_one_point_proper_mono(model_a):
    m = subdiagram(model_a.cod, {"*": [0, 2]})
    flags = classify_density(m)
    assert not flags.dense and flags.closed


def test_one_point_dense_monos_are_isos(pt):
    x = from_sizes(pt, {"*": 3}, {})
    for keep in ([0, 1, 2], [0, 1], []):
        incl = subdiagram(x, {"*": keep})
        assert is_dense_mono(incl) == (len(keep) == 3)


def test_factorize_is_image_on_one_point(model_a):
    fac = factorize_dense_closed(model_a)
    assert sub_eq(fac.closed_part, image_subobject(model_a))
    assert classify_map(fac.dense_part).epi
    assert compose(fac.dense_part, fac.closed_part) == model_a


def test_factorize_closed_mono_gives_iso_dense_part(model_a):
    m = closure(subdiagram(model_a.cod, {"*": [0]}))
    fac = factorize_dense_closed(m)
    assert classify_map(fac.dense_part).iso


def test_factorize_sierpinski(sierpinski_w):
    fac = factorize_dense_closed(sierpinski_w)
    assert classify_map(fac.closed_part).iso
    assert classify_density(fac.dense_part).dense


def test_factorize_parts_classified():
    rng = random.Random(13)
    for _ in range(25):
        poset = rand_poset(rng)
        b = rand_diagram(rng, poset, max_card=2)
        p = rand_map_into(rng, b, max_fibre=2)
        fac = factorize_dense_closed(p)
        assert compose(fac.dense_part, fac.closed_part) == p
        assert classify_density(fac.dense_part).dense
        assert classify_density(fac.closed_part).closed


def test_ofs_classes_compose_and_contain_isos():
    rng = random.Random(14)
    for _ in range(12):
        poset = rand_poset(rng)
        y = rand_diagram(rng, poset, max_card=2)
        assert classify_density(identity(y)).dense
        assert classify_density(identity(y)).closed
        d1 = rand_dense_map(rng, y)
        d2 = rand_dense_map(rng, d1.dom)
        assert classify_density(compose(d2, d1)).dense
        c1 = closure(rand_subobject(rng, y))
        c2 = closure(rand_subobject(rng, c1.dom))
        assert classify_density(compose(c2, c1)).closed


def test_stability():
    rng = random.Random(15)
    for _ in range(20):
        poset = rand_poset(rng)
        y = rand_diagram(rng, poset, max_card=2)
        g = rand_map_into(rng, y, max_fibre=2)
        d = rand_dense_map(rng, y)
        assert classify_density(pullback(d, g).p2).dense
        c = closure(rand_subobject(rng, y))
        assert classify_density(pullback(c, g).p2).closed


def test_closure_laws():
    rng = random.Random(16)
    for _ in range(25):
        poset = rand_poset(rng)
        x = rand_diagram(rng, poset, max_card=2)
        a, b = rand_subobject(rng, x), rand_subobject(rng, x)
        ca, cb = closure(a), closure(b)
        assert sub_leq(a, ca) is not None
        assert sub_eq(closure(ca), ca)
        assert sub_eq(sub_intersection(ca, cb), closure(sub_intersection(a, b)))


def test_one_sided_two_out_of_three():
    rng = random.Random(17)
    found = 0
    while found < 15:
        poset = rand_poset(rng)
        x = rand_diagram(rng, poset, max_card=2)
        g = rand_dense_mono(rng, x)
        f = rand_subobject(rng, g.dom)
        gf = compose(f, g)
        if is_dense_mono(gf):
            assert is_dense_mono(f)
            found += 1


def test_distinct_tuples_model_a(model_a):
    dt = distinct_tuples(model_a, 2)
    assert dt.object.elems["*"] == ((0, 1), (1, 0))
    assert classify_map(dt.inclusion).mono
    assert pullback(diagonal(model_a, 2), dt.inclusion).obj.is_empty()


def test_distinct_tuples_n1(model_a):
    dt = distinct_tuples(model_a, 1)
    assert dt.object.is_empty()


def test_distinct_tuples_mono(pt):
    x = from_sizes(pt, {"*": 2}, {})
    m = DiagMap(x, from_sizes(pt, {"*": 3}, {}), {"*": (0, 2)})
    dt = distinct_tuples(m, 2)
    assert dt.object.is_empty()


def test_distinct_pairs_agree_with_diagonal_negation():
    rng = random.Random(18)
    for _ in range(15):
        poset = rand_poset(rng)
        b = rand_diagram(rng, poset, max_card=2)
        p = rand_map_into(rng, b, max_fibre=2)
        dt = distinct_tuples(p, 2)
        neg = negate(diagonal(p, 2))
        assert slice_iso(dt.inclusion, neg.negmap) is not None


def test_n_delta_mono():
    # the copaired injection-tuple map n·W → W ×_B E is a monomorphism
    rng = random.Random(19)
    for _ in range(15):
        poset = rand_poset(rng)
        b = rand_diagram(rng, poset, max_card=2)
        p = rand_map_into(rng, b, max_fibre=3)
        for n in (2, 3):
            fp, incl = distinct_power(p, n)
            w = incl.dom
            w_to_b = compose(incl, fp.anchor)
            kernel = pullback(w_to_b, p)
            cop = copower(n, w)
            legs = [kernel.mediate(identity(w), compose(incl, fp.projections[i]))
                    for i in range(n)]
            assert classify_map(cop.copair(legs)).mono


def test_decidability_one_point(model_a):
    rng = random.Random(20)
    for _ in range(15):
        m = rand_subobject(rng, model_a.cod)
        res = decidability(m)
        assert res.decidable


def test_decidability_sierpinski(sierpinski_w):
    res = decidability(sierpinski_w)
    assert not res.decidable
    assert classify_map(res.map).mono
    assert is_dense_mono(res.map)
    assert not classify_map(res.map).iso


def test_decidability_iso(model_a):
    res = decidability(identity(model_a.cod))
    assert res.decidable
    assert res.negation.complement.is_empty()


def test_decidability_rejects_non_mono(model_a):
    with pytest.raises(ShapeError):
        decidability(model_a)


def test_neg_contravariant_identity(model_a):
    a = subdiagram(model_a.cod, {"*": [0]})
    out = neg_contravariant(a, a)
    assert out == identity(negate(a).complement)


def test_neg_contravariant_one_point(model_a):
    x = model_a.cod
    a = subdiagram(x, {"*": [0]})
    b = subdiagram(x, {"*": [0, 1]})
    out = neg_contravariant(a, b)
    assert classify_map(out).mono
    assert compose(out, negate(a).negmap) == negate(b).negmap
    # complements reverse: ¬b = {2} inside ¬a = {1, 2}
    assert set(negate(b).negmap.components["*"]) == {2}
    assert set(negate(a).negmap.components["*"]) == {1, 2}


def test_neg_contravariant_sierpinski(sp, sierpinski_w):
    x = sierpinski_w.cod
    out = neg_contravariant(sierpinski_w, identity(x))
    assert out.dom.is_empty()
    # applying it twice gives closure functoriality
    na, nb = negate(sierpinski_w).negmap, negate(identity(x)).negmap
    again = neg_contravariant(nb, na)
    assert compose(again, negate(nb).negmap) == negate(na).negmap


def test_closure_functoriality_via_double_application():
    rng = random.Random(21)
    for _ in range(10):
        poset = rand_poset(rng)
        x = rand_diagram(rng, poset, max_card=2)
        a = rand_subobject(rng, x)
        b_incl = rand_subobject(rng, x)
        both = sub_intersection(a, b_incl)
        if sub_leq(both, b_incl) is None:
            continue
        rev = neg_contravariant(both, b_incl)
        na, nb = negate(both).negmap, negate(b_incl).negmap
        cl = neg_contravariant(nb, na)
        assert sub_leq(closure(both), closure(b_incl)) is not None
