"""Command-line front end: model ingestion, dispatch, JSON/DOT output.

Exit codes: 0 success; 1 invariant failure under `check`; 2 unknown name;
3 validation error; 4 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import ModelError, PolyfunError, ResourceBoundError
from .checks import run_checks
from .counting import formal_derivative
from .deriv import derivative
from .diagram import classify_map, from_sizes
from .dot import export_dot
from .limits import bang
from .localization import invert_dense_mono, localized_derivative, span_equal, span_compose, embed, identity_span
from .models import (ModelFile, load_model, parse_model, serialize_diagram,
                     serialize_map, serialize_poly)
from .negation import decidability, factorize_dense_closed, negate, classify_density
from .poly import counting_polynomial, extension_eval, poly_compose, poly_product
from .report import discrepancy_report
from .slices import as_slice
from .terms import classical_term, homterm, n_fibre_pullback, constant_term


class NameError2(PolyfunError):
    """Unknown name in the model (exit code 2)."""


def _lookup(table, name, kind):
    if name not in table:
        raise NameError2(f"unknown {kind} {name!r}")
    return table[name]


def _maybe_counting(poly):
    if len(poly.e.poset.elements) == 1 and poly.is_one_variable():
        return counting_polynomial(poly).pairs()
    return None


def cmd_eval(model, args):
    poly = _lookup(model.polynomials, args.poly, "polynomial")
    if args.arg is not None:
        anchor = _lookup(model.morphisms, args.arg, "morphism")
        x = as_slice(anchor)
    else:
        pt = poly.e.poset
        if any(poly.i.size(j) != 1 for j in pt.elements):
            raise ModelError([{"pointer": "/eval", "message": "--size needs I = 1"}])
        x = as_slice(bang(from_sizes(pt, {j: args.size for j in pt.elements},
                                     {pair: tuple(range(args.size))
                                      for pair in pt.strict_pairs()}), poly.i))
    res = extension_eval(poly, x)
    return {"command": "eval", "poly": args.poly,
            "result": serialize_map(res.anchor),
            "sizes": {j: res.total.size(j) for j in res.total.poset.elements}}


def cmd_compose(model, args):
    outer = _lookup(model.polynomials, args.outer, "polynomial")
    inner = _lookup(model.polynomials, args.inner, "polynomial")
    out = poly_compose(outer, inner)
    return {"command": "compose", "outer": args.outer, "inner": args.inner,
            "result": serialize_poly(out), "counting": _maybe_counting(out)}, out


def cmd_product(model, args):
    left = _lookup(model.polynomials, args.left, "polynomial")
    right = _lookup(model.polynomials, args.right, "polynomial")
    out = poly_product(left, right)
    return {"command": "product", "left": args.left, "right": args.right,
            "result": serialize_poly(out), "counting": _maybe_counting(out)}, out


def cmd_derive(model, args):
    poly = _lookup(model.polynomials, args.poly, "polynomial")
    res = derivative(poly)
    data = {"command": "derive", "poly": args.poly,
            "result": serialize_poly(res.poly),
            "counting": _maybe_counting(res.poly),
            "decidable": res.decidable}
    if res.witness is not None:
        data["witness"] = {"triangles_ok": res.witness.triangles_ok}
    if res.note:
        data["note"] = res.note
    return data, res.poly


def cmd_negate(model, args):
    f = _lookup(model.morphisms, args.map, "morphism")
    res = negate(f)
    return {"command": "negate", "map": args.map,
            "complement": serialize_diagram(res.complement),
            "negmap": serialize_map(res.negmap)}, res.negmap


def cmd_factorize(model, args):
    f = _lookup(model.morphisms, args.map, "morphism")
    res = factorize_dense_closed(f)
    return {"command": "factorize", "map": args.map,
            "image": serialize_diagram(res.image),
            "dense_part": serialize_map(res.dense_part),
            "closed_part": serialize_map(res.closed_part)}, res


def cmd_homterm(model, args):
    poly = _lookup(model.polynomials, args.poly, "polynomial")
    res = homterm(poly, args.n)
    data = {"command": "homterm", "poly": args.poly, "n": args.n,
            "result": serialize_poly(res.poly),
            "strict_counting": _maybe_counting(res.poly)}
    if len(poly.e.poset.elements) == 1 and poly.is_one_variable():
        cl = classical_term(poly, args.n)
        data["classical_counting"] = counting_polynomial(cl).pairs()
        data["strict_coefficient"] = counting_polynomial(res.poly).coefficient(args.n)
        data["classical_coefficient"] = counting_polynomial(cl).coefficient(args.n)
    return data, res.poly


def cmd_classical_term(model, args):
    poly = _lookup(model.polynomials, args.poly, "polynomial")
    order = args.n if args.sigma is None else [int(v) for v in args.sigma.split(",") if v != ""]
    if order is None:
        raise ModelError([{"pointer": "/classical-term",
                           "message": "need --n or --sigma"}])
    out = classical_term(poly, order)
    return {"command": "classical-term", "poly": args.poly,
            "order": order if isinstance(order, int) else list(order),
            "result": serialize_poly(out),
            "counting": _maybe_counting(out)}, out


def cmd_constant(model, args):
    poly = _lookup(model.polynomials, args.poly, "polynomial")
    out = constant_term(poly)
    return {"command": "constant", "poly": args.poly,
            "result": serialize_poly(out), "counting": _maybe_counting(out)}, out


def cmd_nfpb(model, args):
    p = _lookup(model.morphisms, args.map, "morphism")
    res = n_fibre_pullback(p, args.n)
    return {"command": "nfpb", "map": args.map, "n": args.n,
            "term_base": serialize_diagram(res.term_base),
            "base_to_b": serialize_map(res.base_to_b),
            "left": serialize_map(res.left)}, res.term_base


def cmd_decidability(model, args):
    m = _lookup(model.morphisms, args.map, "morphism")
    res = decidability(m)
    flags = classify_density(res.map)
    return {"command": "decidability", "map": args.map,
            "decidable": res.decidable,
            "decidability_map": serialize_map(res.map),
            "dense": flags.dense,
            "mono": classify_map(res.map).mono}, res.map


def cmd_localize_invert(model, args):
    w = _lookup(model.morphisms, args.map, "morphism")
    inv = invert_dense_mono(w)
    fwd = embed(w)
    ok = (span_equal(span_compose(inv, fwd), identity_span(w.dom))
          and span_equal(span_compose(fwd, inv), identity_span(w.cod)))
    return {"command": "localize-invert", "map": args.map,
            "inverse": {"left": serialize_map(inv.left),
                        "right": serialize_map(inv.right)},
            "two_sided_inverse": ok}, None


def cmd_localized_derive(model, args):
    poly = _lookup(model.polynomials, args.poly, "polynomial")
    res = localized_derivative(poly)
    return {"command": "localized-derive", "poly": args.poly,
            "result": serialize_poly(res.poly),
            "counting": _maybe_counting(res.poly),
            "decidable": res.decidable,
            "counit_iso_ok": res.counit_iso_ok,
            "triangles_ok": res.triangles_ok}, res.poly


def cmd_report(model, args):
    poly = _lookup(model.polynomials, args.poly, "polynomial")
    return {"command": "report", "poly": args.poly,
            "report": discrepancy_report(poly)}, None


def cmd_check(model, args):
    return run_checks(model, args.seed), None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polyfun",
                                 description="finite-set diagram calculus")
    ap.add_argument("-f", "--file", required=True, help="model JSON file")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dot", action="store_true",
                        help="emit DOT for the main result instead of JSON")
    sub = ap.add_subparsers(dest="command", required=True)

    def p(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    sp = p("eval"); sp.add_argument("--poly", required=True)
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--arg", help="morphism name used as the slice anchor")
    g.add_argument("--size", type=int, help="argument size when I = 1")
    sp = p("compose"); sp.add_argument("--outer", required=True); sp.add_argument("--inner", required=True)
    sp = p("product"); sp.add_argument("--left", required=True); sp.add_argument("--right", required=True)
    sp = p("derive"); sp.add_argument("--poly", required=True)
    sp = p("negate"); sp.add_argument("--map", required=True)
    sp = p("factorize"); sp.add_argument("--map", required=True)
    sp = p("homterm"); sp.add_argument("--poly", required=True); sp.add_argument("--n", type=int, required=True)
    sp = p("classical-term"); sp.add_argument("--poly", required=True)
    sp.add_argument("--n", type=int); sp.add_argument("--sigma")
    sp = p("constant"); sp.add_argument("--poly", required=True)
    sp = p("nfpb"); sp.add_argument("--map", required=True); sp.add_argument("--n", type=int, required=True)
    sp = p("decidability"); sp.add_argument("--map", required=True)
    sp = p("localize-invert"); sp.add_argument("--map", required=True)
    sp = p("localized-derive"); sp.add_argument("--poly", required=True)
    sp = p("report"); sp.add_argument("--poly", required=True)
    sp = p("check"); sp.add_argument("--seed", type=int, required=True)
    return ap


_DISPATCH = {
    "eval": cmd_eval,
    "compose": cmd_compose,
    "product": cmd_product,
    "derive": cmd_derive,
    "negate": cmd_negate,
    "factorize": cmd_factorize,
    "homterm": cmd_homterm,
    "classical-term": cmd_classical_term,
    "constant": cmd_constant,
    "nfpb": cmd_nfpb,
    "decidability": cmd_decidability,
    "localize-invert": cmd_localize_invert,
    "localized-derive": cmd_localized_derive,
    "report": cmd_report,
    "check": cmd_check,
}


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        model = load_model(args.file)
    except FileNotFoundError:
        print(json.dumps({"error": f"no such file: {args.file}"}), file=sys.stderr)
        return 3
    except ModelError as exc:
        print(json.dumps({"error": "validation", "problems": exc.problems},
                         indent=2, sort_keys=True))
        return 3
    try:
        out = _DISPATCH[args.command](model, args)
    except NameError2 as exc:
        print(json.dumps({"error": str(exc)}, sort_keys=True))
        return 2
    except ResourceBoundError as exc:
        print(json.dumps({"error": str(exc)}, sort_keys=True))
        return 4
    except (ModelError, PolyfunError) as exc:
        problems = getattr(exc, "problems", [{"pointer": "", "message": str(exc)}])
        print(json.dumps({"error": "validation", "problems": problems},
                         indent=2, sort_keys=True))
        return 3
    if isinstance(out, tuple):
        data, artifact = out
    else:
        data, artifact = out, None
    if args.dot:
        if artifact is None:
            print(json.dumps({"error": "no DOT rendering for this command"},
                             sort_keys=True))
            return 3
        target = artifact
        from .poly import Polynomial
        if isinstance(target, Polynomial):
            target = target.p
        print(export_dot(target), end="")
    else:
        print(json.dumps(data, indent=2, sort_keys=True))
    if args.command == "check" and data.get("failures"):
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
