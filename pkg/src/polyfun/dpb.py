"""Distributivity pullbacks: the terminal pullback around a composable pair.

dpb(u, p) is assembled from the dependent product: the right edge is
Π_p u, the apex is its pullback along p, and the counit is the evaluation.
dpb_mediate factors any other pullback around (u, p) through it, using the
Δ ⊣ Π transpose, and verifies that the factoring square is a pullback.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ShapeError, BoundaryError
from .diagram import DiagMap, Diagram, classify_map, compose, invert_iso
from .limits import pullback
from .slices import SliceObj, pi, pi_counit, pi_transpose


@dataclass(frozen=True)
class DpbResult:
    u: DiagMap        # A → E
    p: DiagMap        # E → B
    apex: Diagram     # X
    side: Diagram     # Y
    counit: DiagMap   # X → A
    top: DiagMap      # X → Y
    right: DiagMap    # Y → B


def dpb(u: DiagMap, p: DiagMap) -> DpbResult:
    """The distributivity pullback around u: A→E and p: E→B."""
    if u.cod != p.dom:
        raise BoundaryError("dpb: cod u must equal dom p")
    u_slice = SliceObj(u.dom, u)
    piu = pi(p, u_slice)
    pb = pullback(p, piu.anchor)
    counit = pi_counit(p, u_slice, pix=piu)
    res = DpbResult(u=u, p=p, apex=pb.obj, side=piu.total,
                    counit=counit, top=pb.p2, right=piu.anchor)
    # around-square sanity: both boundary paths from the apex agree
    assert compose(res.counit, compose(u, p)) == compose(res.top, res.right)
    assert compose(res.counit, u) == pb.p1
    return res


def _is_pullback_around(u: DiagMap, p: DiagMap, counit2: DiagMap,
                        top2: DiagMap, right2: DiagMap) -> bool:
    """Check that (X', Y') with the given maps is a pullback around (u, p)."""
    if counit2.dom != top2.dom or counit2.cod != u.dom:
        return False
    if top2.cod != right2.dom or right2.cod != p.cod:
        return False
    if compose(counit2, compose(u, p)) != compose(top2, right2):
        return False
    pb = pullback(p, right2)
    try:
        cmp_map = pb.mediate(compose(counit2, u), top2)
    except ShapeError:
        return False
    return classify_map(cmp_map).iso


def dpb_mediate(d: DpbResult, counit2: DiagMap, top2: DiagMap,
                right2: DiagMap) -> tuple:
    """Unique factorization of a competitor pullback around (d.u, d.p).

    Returns (side_map: Y'→Y, apex_map: X'→X); the square they form with the
    tops is verified to be a pullback.
    """
    if not _is_pullback_around(d.u, d.p, counit2, top2, right2):
        raise ShapeError("dpb_mediate: competitor is not a pullback around (u, p)")
    u_slice = SliceObj(d.u.dom, d.u)
    piu = SliceObj(d.side, d.right)
    # rebase the competitor counit on the canonical pullback carrier
    pb2 = pullback(d.p, right2)
    cmp_iso = pb2.mediate(compose(counit2, d.u), top2)
    g = compose(invert_iso(cmp_iso), counit2)
    side_map = pi_transpose(d.p, SliceObj(right2.dom, right2), u_slice, g, pix=piu)
    pb = pullback(d.p, d.right)
    apex_map = pb.mediate(compose(counit2, d.u), compose(top2, side_map))
    # factorization equations
    assert compose(side_map, d.right) == right2
    assert compose(apex_map, d.counit) == counit2
    assert compose(apex_map, d.top) == compose(top2, side_map)
    # the factoring square must itself be a pullback
    sq = pullback(d.top, side_map)
    sq_cmp = sq.mediate(apex_map, top2)
    if not classify_map(sq_cmp).iso:
        raise ShapeError("dpb_mediate: factoring square failed to be a pullback")
    return side_map, apex_map
