"""Deterministic DOT export of diagrams, maps, and factorizations."""

from __future__ import annotations

from .diagram import DiagMap, Diagram
from .models import diagram_labels
from .negation import FactorizationResult


def _cluster(lines, d: Diagram, prefix: str, title: str) -> None:
    lines.append(f'  subgraph cluster_{prefix} {{')
    lines.append(f'    label="{title}";')
    for j in d.poset.elements:
        labels = diagram_labels(d, j)
        for i in range(d.size(j)):
            lines.append(f'    {prefix}_{_safe(j)}_{i} [label="{j}:{labels[i]}"];')
    for (j, k) in d.poset.covers():
        for i, v in enumerate(d.tr(j, k)):
            lines.append(f'    {prefix}_{_safe(j)}_{i} -> {prefix}_{_safe(k)}_{v};')
    lines.append("  }")


def _safe(j) -> str:
    return "".join(c if c.isalnum() else "_" for c in str(j))


def _map_edges(lines, f: DiagMap, src_prefix: str, dst_prefix: str) -> None:
    for j in f.dom.poset.elements:
        for i, v in enumerate(f.components[j]):
            lines.append(
                f'  {src_prefix}_{_safe(j)}_{i} -> {dst_prefix}_{_safe(j)}_{v} [style=dashed];')


def export_dot(obj) -> str:
    """Render a Diagram, DiagMap, or FactorizationResult as DOT text."""
    lines = ["digraph polyfun {", "  rankdir=LR;"]
    if isinstance(obj, Diagram):
        _cluster(lines, obj, "d", "diagram")
    elif isinstance(obj, DiagMap):
        _cluster(lines, obj.dom, "dom", "dom")
        _cluster(lines, obj.cod, "cod", "cod")
        _map_edges(lines, obj, "dom", "cod")
    elif isinstance(obj, FactorizationResult):
        _cluster(lines, obj.dense_part.dom, "src", "source")
        _cluster(lines, obj.image, "img", "image (dense image)")
        _cluster(lines, obj.closed_part.cod, "tgt", "target")
        _map_edges(lines, obj.dense_part, "src", "img")
        _map_edges(lines, obj.closed_part, "img", "tgt")
    else:
        raise TypeError(f"export_dot: unsupported value {type(obj).__name__}")
    lines.append("}")
    return "\n".join(lines) + "\n"
