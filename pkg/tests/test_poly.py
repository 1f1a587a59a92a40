import random

import pytest

from polyfun import (BoundaryError, CountingPoly, DiagMap, Polynomial,
                     bang, classify_map, compose, counting_polynomial,
                     extension_eval, formal_derivative, from_sizes, identity,
                     identity_poly, linear_poly, poly_compose, poly_equiv,
                     poly_from_map, poly_product, pullback, terminal,
                     weber_composite, weber_mediate)
from polyfun.diagram import hom_maps
from polyfun.poly import WeberCompetitor
from polyfun.randgen import rand_map_between, rand_one_var_poly
from polyfun.slices import as_slice


def _size_slice(poset, i_diag, n):
    return as_slice(bang(from_sizes(poset, {j: n for j in poset.elements},
                                    {pr: tuple(range(n)) for pr in poset.strict_pairs()}),
                         i_diag))


def test_counting_model_a(poly_a):
    assert counting_polynomial(poly_a) == CountingPoly([(2, 1), (1, 1), (0, 1)])


def test_extension_sizes(poly_a):
    cp = counting_polynomial(poly_a)
    for n in range(5):
        x = _size_slice(poly_a.e.poset, poly_a.i, n)
        assert extension_eval(poly_a, x).total.size("*") == cp(n)


def test_extension_identity_poly(pt):
    ip = identity_poly(pt)
    x = _size_slice(pt, ip.i, 3)
    out = extension_eval(ip, x)
    assert out.total.size("*") == 3


def test_extension_empty_argument(poly_a):
    x = _size_slice(poly_a.e.poset, poly_a.i, 0)
    assert extension_eval(poly_a, x).total.size("*") == 1


def test_counting_cross_oracle_randomized():
    rng = random.Random(22)
    for _ in range(25):
        poly = rand_one_var_poly(rng)
        cp = counting_polynomial(poly)
        for n in range(4):
            x = _size_slice(poly.e.poset, poly.i, n)
            assert extension_eval(poly, x).total.size("*") == cp(n)


def test_compose_example(pt):
    e2 = from_sizes(pt, {"*": 2}, {})
    b1 = from_sizes(pt, {"*": 1}, {})
    inner = poly_from_map(DiagMap(e2, b1, {"*": (0, 0)}))   # X^2
    s1 = from_sizes(pt, {"*": 1}, {})
    t2 = from_sizes(pt, {"*": 2}, {})
    outer = poly_from_map(DiagMap(s1, t2, {"*": (0,)}))     # X + 1
    comp = poly_compose(outer, inner)
    assert counting_polynomial(comp) == CountingPoly([(2, 1), (0, 1)])


def test_compose_identity_laws(poly_a, pt):
    ip = identity_poly(pt)
    assert poly_equiv(poly_compose(ip, poly_a), poly_a) is not None
    assert poly_equiv(poly_compose(poly_a, ip), poly_a) is not None


def test_compose_substitution_randomized():
    rng = random.Random(23)
    for _ in range(15):
        inner = rand_one_var_poly(rng, max_b=2, max_fibre=2)
        outer = rand_one_var_poly(rng, max_b=2, max_fibre=2)
        comp = poly_compose(outer, inner)
        expect = counting_polynomial(outer).substitute(counting_polynomial(inner))
        assert counting_polynomial(comp) == expect


def test_compose_double_evaluation_randomized():
    rng = random.Random(24)
    for _ in range(6):
        inner = rand_one_var_poly(rng, max_b=2, max_fibre=2)
        outer = rand_one_var_poly(rng, max_b=2, max_fibre=2)
        comp = poly_compose(outer, inner)
        for n in range(4):
            x = _size_slice(comp.e.poset, comp.i, n)
            lhs = extension_eval(comp, x).total.size("*")
            rhs = extension_eval(outer, extension_eval(inner, x)).total.size("*")
            assert lhs == rhs


def test_compose_boundary_error(poly_a, sp):
    from polyfun import identity_poly as ip
    with pytest.raises(BoundaryError):
        poly_compose(poly_a, ip(sp))


def test_product_examples(pt, poly_a):
    e2 = from_sizes(pt, {"*": 2}, {})
    b1 = from_sizes(pt, {"*": 1}, {})
    xsq = poly_from_map(DiagMap(e2, b1, {"*": (0, 0)}))
    lin = linear_poly(pt)
    assert counting_polynomial(poly_product(xsq, lin)) == CountingPoly([(3, 1)])
    assert counting_polynomial(poly_product(poly_a, lin)) == \
        CountingPoly([(3, 1), (2, 1), (1, 1)])
    const1 = poly_from_map(DiagMap(from_sizes(pt, {"*": 0}, {}), b1, {"*": ()}))
    assert counting_polynomial(poly_product(poly_a, const1)) == \
        counting_polynomial(poly_a)


def test_product_linear_example_shape(poly_a):
    # multiplying by X adds one to every exponent: Σ X^(|fibre|+1)
    lin = linear_poly(poly_a.e.poset)
    prod = poly_product(poly_a, lin)
    assert counting_polynomial(prod) == \
        counting_polynomial(poly_a) * CountingPoly.x()


def test_product_soundness_randomized():
    rng = random.Random(25)
    for _ in range(20):
        a = rand_one_var_poly(rng, max_b=2, max_fibre=2)
        b = rand_one_var_poly(rng, max_b=2, max_fibre=2)
        assert counting_polynomial(poly_product(a, b)) == \
            counting_polynomial(a) * counting_polynomial(b)


def test_poly_equiv_self_and_relabel(poly_a, pt):
    assert poly_equiv(poly_a, poly_a) is not None
    # relabel E by a bijection
    e = poly_a.e
    perm = DiagMap(e, e, {"*": (2, 0, 1)})
    p2 = Polynomial(compose(perm, poly_a.s), compose(perm, poly_a.p), poly_a.t)
    iso = poly_equiv(p2, poly_a)
    assert iso is not None


def test_poly_equiv_distinguishes(pt):
    e2 = from_sizes(pt, {"*": 2}, {})
    e3 = from_sizes(pt, {"*": 3}, {})
    b1 = from_sizes(pt, {"*": 1}, {})
    xsq = poly_from_map(DiagMap(e2, b1, {"*": (0, 0)}))
    xcube = poly_from_map(DiagMap(e3, b1, {"*": (0, 0, 0)}))
    assert poly_equiv(xsq, xcube) is None


def test_weber_terminality_randomized():
    rng = random.Random(26)
    for _ in range(8):
        inner = rand_one_var_poly(rng, max_b=2, max_fibre=2)
        outer = rand_one_var_poly(rng, max_b=2, max_fibre=2)
        comp = weber_composite(outer, inner)
        # stack a random pullback on top of the composite
        r = rand_map_between(rng, from_sizes(comp.poly.e.poset, {"*": rng.randint(0, 2)}, {}),
                             comp.right_dpb.side)
        if r is None:
            continue
        z2 = r.dom
        ypb = pullback(comp.right_dpb.top, r)
        xpb = pullback(comp.left_pb.p2, ypb.p1)
        competitor = WeberCompetitor(
            to_e=compose(xpb.p1, comp.left_pb.p1),
            top_xy=xpb.p2,
            to_b=compose(ypb.p1, compose(comp.right_dpb.counit, comp.middle.p1)),
            to_s=compose(ypb.p1, compose(comp.right_dpb.counit, comp.middle.p2)),
            top_yz=ypb.p2,
            to_t=compose(r, comp.right_dpb.right),
        )
        x_map, y_map, z_map = weber_mediate(comp, competitor)
        assert z_map == r
        assert y_map == ypb.p1
        assert x_map == xpb.p1
        # uniqueness by exhaustive search over candidate triples
        count = 0
        for zc in hom_maps(z2, comp.right_dpb.side):
            if compose(zc, comp.right_dpb.right) != competitor.to_t:
                continue
            for yc in hom_maps(ypb.obj, comp.right_dpb.apex):
                if compose(yc, comp.right_dpb.top) != compose(competitor.top_yz, zc):
                    continue
                if compose(yc, compose(comp.right_dpb.counit, comp.middle.p1)) != competitor.to_b:
                    continue
                if not classify_map(pullback(comp.right_dpb.top, zc)
                                    .mediate(yc, competitor.top_yz)).iso:
                    continue
                for xc in hom_maps(xpb.obj, comp.poly.e):
                    if compose(xc, comp.left_pb.p1) != competitor.to_e:
                        continue
                    if compose(xc, comp.left_pb.p2) != yc:
                        continue
                    if not classify_map(pullback(comp.left_pb.p2, yc)
                                        .mediate(xc, competitor.top_xy)).iso:
                        continue
                    count += 1
        assert count == 1
