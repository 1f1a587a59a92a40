import random

import pytest

from polyfun import (DiagMap, bang, compose, diagram_iso, from_sizes,
                     identity, pullback, slice_iso, terminal)
from polyfun.slices import (SliceObj, as_slice, delta, pi, pi_counit,
                            pi_transpose, pi_unit, sigma, slice_hom_count,
                            slice_hom_maps)
from polyfun.randgen import (rand_diagram, rand_map_into, rand_poset,
                             rand_slice)


def _fibre_slice(base_map, sizes):
    """Slice over dom(base_map) with prescribed fibre sizes (one-point)."""
    pt = base_map.dom.poset
    total = from_sizes(pt, {"*": sum(sizes)}, {})
    comp = []
    for e, n in enumerate(sizes):
        comp += [e] * n
    return as_slice(DiagMap(total, base_map.dom, {"*": tuple(comp)}))


def test_sigma_identity(model_a):
    x = _fibre_slice(model_a, (1, 1, 0))
    assert sigma(identity(model_a.dom), x).anchor == x.anchor


def test_sigma_slice_of_identity(model_a):
    x = as_slice(identity(model_a.dom))
    out = sigma(model_a, x)
    assert out.anchor == model_a


def test_sigma_associative(model_a):
    q = bang(model_a.cod)
    x = _fibre_slice(model_a, (2, 1, 0))
    lhs = sigma(q, sigma(model_a, x)).anchor
    rhs = sigma(compose(model_a, q), x).anchor
    assert lhs == rhs


def test_delta_identity(model_a):
    y = _fibre_slice(identity(model_a.cod), (1, 2, 0))
    out = delta(identity(model_a.cod), y)
    assert diagram_iso(out.total, y.total) is not None


def test_delta_of_identity_slice(model_a):
    out = delta(model_a, as_slice(identity(model_a.cod)))
    assert diagram_iso(out.total, model_a.dom) is not None


def test_delta_fibre_count(model_a):
    # two elements over b0 pull back to four over {e0, e1}
    y = _fibre_slice(identity(model_a.cod), (2, 0, 0))
    out = delta(model_a, y)
    assert out.total.size("*") == 4


def test_pi_section_counts(model_a):
    x = _fibre_slice(model_a, (2, 1, 0))
    px = pi(model_a, x)
    sizes = [0, 0, 0]
    for b in px.anchor.components["*"]:
        sizes[b] += 1
    assert sizes == [2, 0, 1]
    assert px.total.size("*") == 3


def test_pi_identity(model_a):
    x = _fibre_slice(model_a, (2, 1, 0))
    px = pi(identity(model_a.dom), x)
    assert slice_hom_count(px, x) >= 1
    assert diagram_iso(px.total, x.total) is not None


def test_pi_empty_product(model_a):
    # a point with empty fibre contributes exactly one (empty) section
    x = _fibre_slice(model_a, (0, 0, 0))
    px = pi(model_a, x)
    assert px.total.size("*") == 1
    assert px.anchor.components["*"] == (2,)


def test_adjunction_counts_randomized():
    rng = random.Random(20240811)
    for _ in range(40):
        poset = rand_poset(rng)
        b = rand_diagram(rng, poset, max_card=2)
        p = rand_map_into(rng, b, max_fibre=2)
        x = rand_slice(rng, p.dom)
        y = rand_slice(rng, b)
        assert slice_hom_count(delta(p, y), x) == slice_hom_count(y, pi(p, x))


def test_transpose_is_the_hom_bijection():
    rng = random.Random(7)
    for _ in range(15):
        poset = rand_poset(rng)
        b = rand_diagram(rng, poset, max_card=2)
        p = rand_map_into(rng, b, max_fibre=2)
        x = rand_slice(rng, p.dom)
        y = rand_slice(rng, b)
        px = pi(p, x)
        dpy = delta(p, y)
        images = set()
        count = 0
        for g in slice_hom_maps(SliceObj(dpy.total, dpy.anchor), x):
            count += 1
            ghat = pi_transpose(p, y, x, g, pix=px)
            assert compose(ghat, px.anchor) == y.anchor
            images.add(tuple(sorted(ghat.components.items())))
        assert len(images) == count  # transpose is injective


def test_transpose_naturality(model_a):
    # transpose(g ∘ Δ(h)) = transpose(g) ∘ h for a precomposition h
    p = model_a
    x = _fibre_slice(p, (2, 1, 1))
    y = _fibre_slice(identity(p.cod), (1, 1, 1))
    y2 = _fibre_slice(identity(p.cod), (1, 0, 1))
    h = DiagMap(y2.total, y.total, {"*": (0, 2)})
    assert compose(h, y.anchor) == y2.anchor
    px = pi(p, x)
    dpy = delta(p, y)
    dpy2 = delta(p, y2)
    # Δ_p h
    dh = pullback(p, y.anchor).mediate(dpy2.anchor,
                                       compose(pullback(p, y2.anchor).p2, h))
    for g in slice_hom_maps(SliceObj(dpy.total, dpy.anchor), x):
        lhs = pi_transpose(p, y2, x, compose(dh, g), pix=px)
        rhs = compose(h, pi_transpose(p, y, x, g, pix=px))
        assert lhs == rhs
        break


def test_counit_transpose_is_identity(model_a):
    # the adjunct of the evaluation Δ_p Π_p x → x is the identity on Π_p x
    p = model_a
    x = _fibre_slice(p, (2, 1, 0))
    px = pi(p, x)
    eps = pi_counit(p, x, pix=px)
    assert pi_transpose(p, px, x, eps, pix=px) == identity(px.total)


def test_delta_side_triangle(model_a):
    # ε_{Δ_p y} ∘ Δ_p(η_y) is the identity on Δ_p y
    p = model_a
    y = _fibre_slice(identity(p.cod), (1, 2, 1))
    dpy = delta(p, y)
    dpy_slice = SliceObj(dpy.total, dpy.anchor)
    eta = pi_unit(p, y)
    pdy = pi(p, dpy_slice)
    proj_y = pullback(p, y.anchor).p2
    delta_eta = pullback(p, pdy.anchor).mediate(dpy.anchor, compose(proj_y, eta))
    eps = pi_counit(p, dpy_slice, pix=pdy)
    assert compose(delta_eta, eps) == identity(dpy.total)


def test_functor_laws_composites():
    # Σ, Δ, Π send composites to composites (up to natural iso)
    rng = random.Random(99)
    for _ in range(10):
        poset = rand_poset(rng)
        c = rand_diagram(rng, poset, max_card=2)
        q = rand_map_into(rng, c, max_fibre=2)
        p = rand_map_into(rng, q.dom, max_fibre=2)
        pq = compose(p, q)
        x = rand_slice(rng, p.dom)
        two_step = pi(q, pi(p, x))
        one_step = pi(pq, x)
        iso = slice_iso(one_step.anchor, two_step.anchor)
        assert iso is not None
        y = rand_slice(rng, c)
        d_two = delta(p, delta(q, y))
        d_one = delta(pq, y)
        assert slice_iso(d_one.anchor, d_two.anchor) is not None
        z = rand_slice(rng, p.dom)
        assert sigma(pq, z).anchor == sigma(q, sigma(p, z)).anchor
