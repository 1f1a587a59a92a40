"""Machine-readable discrepancy report.

Records where the two shipped term semantics disagree (enumeration vs
histogram coefficients) and how the order-F candidate compares with the
iterated formal derivative.  Agreement is reported, never asserted.
"""

from __future__ import annotations

from .counting import formal_derivative
from .diagram import from_sizes
from .deriv import candidate_derivative_orderF
from .poly import Polynomial, counting_polynomial
from .terms import classical_term, homterm


def term_semantics_report(poly: Polynomial, n: int = 2) -> dict:
    strict = counting_polynomial(homterm(poly, n).poly)
    classical = counting_polynomial(classical_term(poly, n))
    return {
        "n": n,
        "strict_counting": strict.pairs(),
        "classical_counting": classical.pairs(),
        "agree": strict == classical,
    }


def order_f_report(poly: Polynomial, sizes=(1, 2)) -> list:
    poset = poly.e.poset
    base = counting_polynomial(poly)
    out = []
    for f_size in sizes:
        f = from_sizes(poset, {j: f_size for j in poset.elements},
                       {pair: tuple(range(f_size)) for pair in poset.strict_pairs()})
        cand = candidate_derivative_orderF(poly, f)
        iterated = base
        for _ in range(f_size):
            iterated = formal_derivative(iterated)
        out.append({
            "f_size": f_size,
            "candidate_counting": cand.counting.pairs(),
            "iterated_counting": iterated.pairs(),
            "agree": cand.counting == iterated,
        })
    return out


def discrepancy_report(poly: Polynomial, ns=(2,), f_sizes=(1, 2)) -> dict:
    """Full report for a one-variable polynomial on the one-element poset."""
    return {
        "counting": counting_polynomial(poly).pairs(),
        "term_semantics": [term_semantics_report(poly, n) for n in ns],
        "order_f_derivative": order_f_report(poly, f_sizes),
    }
