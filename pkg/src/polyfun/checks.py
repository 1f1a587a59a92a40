"""Invariant battery behind the `check` subcommand.

Each check returns a record {"name", "ok", "detail"}; the CLI exits nonzero
if any record fails.  Randomized laws run on the model's poset with the
caller-supplied seed.
"""

from __future__ import annotations

import random

from .counting import formal_derivative
from .diagram import classify_map, compose, slice_iso, identity
from .limits import bang, pullback, terminal
from .models import ModelFile
from .negation import (classify_density, closure, factorize_dense_closed,
                       is_dense_mono, negate, sub_eq, sub_intersection,
                       sub_leq)
from .localization import embed, identity_span, invert_dense_mono, span_compose, span_equal
from .poly import counting_polynomial, extension_eval, poly_from_map
from .randgen import (rand_closed_mono, rand_dense_mono, rand_dense_map,
                      rand_diagram, rand_map_into, rand_slice, rand_subobject)
from .report import discrepancy_report
from .slices import as_slice, delta, pi, slice_hom_count
from .terms import classical_term, homterm


def _rec(name, ok, detail=""):
    return {"name": name, "ok": bool(ok), "detail": detail}


def check_morphism(name, f) -> list:
    out = []
    neg = negate(f)
    out.append(_rec(f"negation-disjoint:{name}",
                    pullback(f, neg.negmap).obj.is_empty()))
    nnn = negate(negate(neg.negmap).negmap).negmap
    out.append(_rec(f"triple-negation:{name}",
                    slice_iso(neg.negmap, nnn) is not None))
    fac = factorize_dense_closed(f)
    flags_d = classify_density(fac.dense_part)
    flags_c = classify_density(fac.closed_part)
    out.append(_rec(f"factorization:{name}",
                    compose(fac.dense_part, fac.closed_part) == f
                    and flags_d.dense and flags_c.closed))
    return out


def check_adjunction(poset, rng, cases=15) -> dict:
    bad = 0
    for _ in range(cases):
        b = rand_diagram(rng, poset, max_card=2)
        p = rand_map_into(rng, b, max_fibre=2)
        x = rand_slice(rng, p.dom, max_fibre=2)
        y = rand_slice(rng, b, max_fibre=2)
        if slice_hom_count(delta(p, y), x) != slice_hom_count(y, pi(p, x)):
            bad += 1
    return _rec("adjunction-counts", bad == 0, f"{bad} failures in {cases}")


def check_stability(poset, rng, cases=10) -> dict:
    bad = 0
    for _ in range(cases):
        y = rand_diagram(rng, poset, max_card=2)
        d = rand_dense_map(rng, y)
        g = rand_map_into(rng, y, max_fibre=2)
        if not classify_density(pullback(d, g).p2).dense:
            bad += 1
        c = rand_closed_mono(rng, y)
        if not classify_density(pullback(c, g).p2).closed:
            bad += 1
    return _rec("dense-closed-stability", bad == 0, f"{bad} failures")


def check_closure_laws(poset, rng, cases=10) -> dict:
    bad = 0
    for _ in range(cases):
        x = rand_diagram(rng, poset, max_card=2)
        a = rand_subobject(rng, x)
        b = rand_subobject(rng, x)
        ca, cb = closure(a), closure(b)
        if sub_leq(a, ca) is None:
            bad += 1
        if not sub_eq(closure(ca), ca):
            bad += 1
        if not sub_eq(sub_intersection(ca, cb), closure(sub_intersection(a, b))):
            bad += 1
    return _rec("closure-laws", bad == 0, f"{bad} failures")


def check_localization(poset, rng, cases=8) -> dict:
    bad = 0
    for _ in range(cases):
        x = rand_diagram(rng, poset, max_card=2)
        w = rand_dense_mono(rng, x)
        fwd, inv = embed(w), invert_dense_mono(w)
        if not span_equal(span_compose(inv, fwd), identity_span(w.dom)):
            bad += 1
        if not span_equal(span_compose(fwd, inv), identity_span(x)):
            bad += 1
    return _rec("dense-mono-inversion", bad == 0, f"{bad} failures")


def check_polynomial(name, poly) -> list:
    out = []
    if len(poly.e.poset.elements) != 1 or not poly.is_one_variable():
        out.append(_rec(f"poly:{name}", True, "not a one-element-poset polynomial; skipped"))
        return out
    cp = counting_polynomial(poly)
    pt = poly.e.poset
    ok = True
    from .diagram import from_sizes
    for n in range(4):
        x = as_slice(bang(from_sizes(pt, {pt.elements[0]: n}, {}), poly.i))
        if extension_eval(poly, x).total.size(pt.elements[0]) != cp(n):
            ok = False
    out.append(_rec(f"extension-oracle:{name}", ok))
    from .deriv import derivative
    dr = derivative(poly)
    out.append(_rec(f"derivative-oracle:{name}",
                    counting_polynomial(dr.poly) == formal_derivative(cp)))
    total = {}
    for n in range(cp.degree() + 1):
        c = counting_polynomial(classical_term(poly, n)).coefficient(n)
        if c:
            total[n] = c
    from .counting import CountingPoly
    out.append(_rec(f"term-decomposition:{name}", CountingPoly(total) == cp))
    import math
    ok = True
    for n in range(3):
        strict = counting_polynomial(homterm(poly, n).poly).coefficient(n)
        if strict != math.factorial(n) * counting_polynomial(classical_term(poly, n)).coefficient(n):
            ok = False
    out.append(_rec(f"homterm-vs-classical:{name}", ok))
    return out


def run_checks(model: ModelFile, seed: int) -> dict:
    rng = random.Random(seed)
    records = []
    for name, f in sorted(model.morphisms.items()):
        records.extend(check_morphism(name, f))
    records.append(check_adjunction(model.poset, rng))
    records.append(check_stability(model.poset, rng))
    records.append(check_closure_laws(model.poset, rng))
    records.append(check_localization(model.poset, rng))
    reports = {}
    for name, poly in sorted(model.polynomials.items()):
        records.extend(check_polynomial(name, poly))
        if len(poly.e.poset.elements) == 1 and poly.is_one_variable():
            reports[name] = discrepancy_report(poly)
    failures = sum(1 for r in records if not r["ok"])
    return {"checks": records, "failures": failures, "reports": reports}
