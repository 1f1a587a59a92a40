"""Model file parsing, validation with JSON-pointer locations, serialization.

Schema:
  {"poset": {"elements": [...], "leq": [[a,b], ...]},
   "objects": {name: {"sets": {elem: size_or_label_list},
                      "maps": {"a<=b": [indices]}}},
   "morphisms": {name: {"dom": .., "cod": .., "components": {elem: [indices]}}},
   "polynomials": {name: {"s": .., "p": .., "t": ..}}}

Reflexive leq pairs are supplied automatically; transitive pairs must be
present (reported by pointer if missing).  Transition maps may be given for
covering pairs only; composites are derived and checked.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import ModelError, ShapeError
from .diagram import DiagMap, Diagram
from .poly import Polynomial
from .poset import FinPoset


@dataclass
class ModelFile:
    poset: FinPoset
    objects: dict = field(default_factory=dict)
    morphisms: dict = field(default_factory=dict)
    polynomials: dict = field(default_factory=dict)


def _err(problems, pointer, message):
    problems.append({"pointer": pointer, "message": message})


def _load_poset(data, problems) -> FinPoset | None:
    node = data.get("poset")
    if not isinstance(node, dict):
        _err(problems, "/poset", "missing or non-object poset section")
        return None
    elements = node.get("elements")
    if not isinstance(elements, list) or not elements:
        _err(problems, "/poset/elements", "must be a nonempty list")
        return None
    elements = [str(e) for e in elements]
    leq = {(e, e) for e in elements}
    for i, pair in enumerate(node.get("leq", [])):
        if not (isinstance(pair, list) and len(pair) == 2):
            _err(problems, f"/poset/leq/{i}", "pair must be a two-element list")
            continue
        leq.add((str(pair[0]), str(pair[1])))
    try:
        return FinPoset(elements, leq)
    except ShapeError as exc:
        _err(problems, "/poset/leq", str(exc))
        return None


def _load_object(name, node, poset, problems) -> Diagram | None:
    base = f"/objects/{name}"
    sets = node.get("sets", {})
    elems = {}
    for j in poset.elements:
        spec = sets.get(j, 0)
        if isinstance(spec, int):
            if spec < 0:
                _err(problems, f"{base}/sets/{j}", "size must be >= 0")
                return None
            elems[j] = tuple(range(spec))
        elif isinstance(spec, list):
            elems[j] = tuple(str(s) for s in spec)
        else:
            _err(problems, f"{base}/sets/{j}", "must be a size or a label list")
            return None
    for j in sets:
        if j not in poset.elements:
            _err(problems, f"{base}/sets/{j}", "unknown poset element")
            return None
    given = {}
    for key, row in node.get("maps", {}).items():
        parts = key.split("<=")
        if len(parts) != 2 or (parts[0], parts[1]) not in poset.leq or parts[0] == parts[1]:
            _err(problems, f"{base}/maps/{key}", "key must name a strict leq pair 'a<=b'")
            return None
        if not isinstance(row, list):
            _err(problems, f"{base}/maps/{key}", "must be an index list")
            return None
        given[(parts[0], parts[1])] = tuple(row)
    full = dict(given)
    changed = True
    while changed:
        changed = False
        for (j, k) in poset.strict_pairs():
            if (j, k) in full:
                continue
            for m in poset.elements:
                if (poset.lt(j, m) and poset.lt(m, k)
                        and (j, m) in full and (m, k) in full):
                    try:
                        full[(j, k)] = tuple(full[(m, k)][v] for v in full[(j, m)])
                    except IndexError:
                        _err(problems, f"{base}/maps/{j}<={m}", "index out of range")
                        return None
                    changed = True
                    break
    for (j, k) in poset.strict_pairs():
        if (j, k) not in full:
            _err(problems, f"{base}/maps/{j}<={k}",
                 "missing transition (not derivable from given maps)")
            return None
    try:
        return Diagram(poset, elems, full)
    except ShapeError as exc:
        _err(problems, f"{base}/maps", str(exc))
        return None


def _load_morphism(name, node, objects, problems) -> DiagMap | None:
    base = f"/morphisms/{name}"
    dom_name, cod_name = node.get("dom"), node.get("cod")
    if dom_name not in objects:
        _err(problems, f"{base}/dom", f"unknown object {dom_name!r}")
        return None
    if cod_name not in objects:
        _err(problems, f"{base}/cod", f"unknown object {cod_name!r}")
        return None
    dom, cod = objects[dom_name], objects[cod_name]
    comps = {}
    for j, row in node.get("components", {}).items():
        if j not in dom.poset.elements:
            _err(problems, f"{base}/components/{j}", "unknown poset element")
            return None
        comps[j] = tuple(row)
    for j in dom.poset.elements:
        comps.setdefault(j, ())
        if len(comps[j]) != dom.size(j):
            _err(problems, f"{base}/components/{j}",
                 f"expected {dom.size(j)} entries, got {len(comps[j])}")
            return None
        if any(not (isinstance(v, int) and 0 <= v < cod.size(j)) for v in comps[j]):
            _err(problems, f"{base}/components/{j}", "index out of range")
            return None
    try:
        return DiagMap(dom, cod, comps)
    except ShapeError as exc:
        _err(problems, f"{base}/components", str(exc))
        return None


def parse_model(text: str) -> ModelFile:
    """Parse and validate a model file; raises ModelError with located problems."""
    problems = []
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelError([{"pointer": "", "message": f"invalid JSON: {exc}"}])
    if not isinstance(data, dict):
        raise ModelError([{"pointer": "", "message": "top level must be an object"}])
    poset = _load_poset(data, problems)
    if poset is None:
        raise ModelError(problems)
    model = ModelFile(poset)
    for name, node in sorted(data.get("objects", {}).items()):
        obj = _load_object(name, node, poset, problems)
        if obj is not None:
            model.objects[name] = obj
    for name, node in sorted(data.get("morphisms", {}).items()):
        mor = _load_morphism(name, node, model.objects, problems)
        if mor is not None:
            model.morphisms[name] = mor
    for name, node in sorted(data.get("polynomials", {}).items()):
        base = f"/polynomials/{name}"
        legs = {}
        ok = True
        for leg in ("s", "p", "t"):
            ref = node.get(leg)
            if ref not in model.morphisms:
                _err(problems, f"{base}/{leg}", f"unknown morphism {ref!r}")
                ok = False
            else:
                legs[leg] = model.morphisms[ref]
        if ok:
            try:
                model.polynomials[name] = Polynomial(legs["s"], legs["p"], legs["t"])
            except Exception as exc:
                _err(problems, base, str(exc))
    if problems:
        raise ModelError(problems)
    return model


def load_model(path: str) -> ModelFile:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_model(fh.read())


# -- serialization -------------------------------------------------------------

def label_of(obj) -> str:
    if isinstance(obj, tuple):
        return "(" + ",".join(label_of(o) for o in obj) + ")"
    return str(obj)


def diagram_labels(d: Diagram, j) -> list:
    out = []
    for i in range(d.size(j)):
        lab = label_of(d.elem(j, i))
        out.append(lab if len(lab) <= 40 else f"#{i}")
    return out


def serialize_diagram(d: Diagram) -> dict:
    return {
        "sets": {j: diagram_labels(d, j) for j in d.poset.elements},
        "maps": {f"{j}<={k}": list(tr) for (j, k), tr in sorted(d.transitions.items())},
    }


def serialize_map(f: DiagMap) -> dict:
    return {
        "dom": serialize_diagram(f.dom),
        "cod": serialize_diagram(f.cod),
        "components": {j: list(f.components[j]) for j in f.dom.poset.elements},
    }


def serialize_poly(p: Polynomial) -> dict:
    return {"s": serialize_map(p.s), "p": serialize_map(p.p), "t": serialize_map(p.t)}


def serialize_model(model: ModelFile) -> str:
    data = {
        "poset": {"elements": list(model.poset.elements),
                  "leq": sorted([a, b] for (a, b) in model.poset.leq if a != b)},
        "objects": {
            name: {
                "sets": {j: diagram_labels(obj, j) for j in model.poset.elements},
                "maps": {f"{j}<={k}": list(tr)
                         for (j, k), tr in sorted(obj.transitions.items())},
            }
            for name, obj in sorted(model.objects.items())
        },
        "morphisms": {
            name: {
                "dom": _object_name(model, mor.dom),
                "cod": _object_name(model, mor.cod),
                "components": {j: list(mor.components[j]) for j in model.poset.elements},
            }
            for name, mor in sorted(model.morphisms.items())
        },
        "polynomials": {
            name: {"s": _morphism_name(model, poly.s),
                   "p": _morphism_name(model, poly.p),
                   "t": _morphism_name(model, poly.t)}
            for name, poly in sorted(model.polynomials.items())
        },
    }
    return json.dumps(data, indent=2, sort_keys=True)


def _object_name(model: ModelFile, obj: Diagram) -> str:
    for name, o in model.objects.items():
        if o == obj:
            return name
    raise ShapeError("object is not part of the model")


def _morphism_name(model: ModelFile, mor: DiagMap) -> str:
    for name, m in model.morphisms.items():
        if m == mor:
            return name
    raise ShapeError("morphism is not part of the model")
