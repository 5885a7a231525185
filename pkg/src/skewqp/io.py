"""JSON interchange for quivers with potential and actions, and DOT export."""

from __future__ import annotations

import json
from typing import Any

from .action import ActionError, ArrowImage, CyclicAction
from .cyclo import Cyclotomic
from .qp import Arrow, Potential, Quiver, QuiverError


class FormatError(ValueError):
    """Input does not follow the interchange schema."""


def _require(obj, key, kind, where):
    if not isinstance(obj, dict) or key not in obj:
        raise FormatError(f"{where}: missing key {key!r}")
    val = obj[key]
    if not isinstance(val, kind):
        raise FormatError(f"{where}: {key!r} has the wrong type")
    return val


def _ident(x, where) -> str:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise FormatError(f"{where}: identifiers must be strings")
    return str(x)


def quiver_to_json(q: Quiver) -> dict:
    return {
        "vertices": list(q.vertices),
        "arrows": [{"id": a.id, "src": a.src, "tgt": a.tgt} for a in q.arrows.values()],
    }


def quiver_from_json(data: Any, connected: bool = True) -> Quiver:
    vs = [_ident(v, "vertices") for v in _require(data, "vertices", list, "quiver")]
    arrows = []
    for i, a in enumerate(_require(data, "arrows", list, "quiver")):
        where = f"arrows[{i}]"
        arrows.append(Arrow(_ident(_require(a, "id", (str, int), where), where),
                            _ident(_require(a, "src", (str, int), where), where),
                            _ident(_require(a, "tgt", (str, int), where), where)))
    try:
        return Quiver(vs, arrows, connected=connected)
    except QuiverError as e:
        raise FormatError(str(e)) from None


def qp_to_json(w: Potential) -> dict:
    out = quiver_to_json(w.quiver)
    out["potential"] = [{"cycle": list(k), "coeff": c.to_terms()} for k, c in w.items()]
    out["zeta_order"] = w.order
    return out


def qp_from_json(data: Any, connected: bool = True) -> Potential:
    q = quiver_from_json(data, connected)
    order = data.get("zeta_order", 1)
    if isinstance(order, bool) or not isinstance(order, int) or order < 1:
        raise FormatError("zeta_order must be a positive integer")
    terms = []
    for i, t in enumerate(data.get("potential", [])):
        where = f"potential[{i}]"
        cyc = [_ident(a, where) for a in _require(t, "cycle", list, where)]
        coeff = _require(t, "coeff", list, where)
        try:
            terms.append((cyc, Cyclotomic.from_terms(order, [tuple(x) for x in coeff])))
        except (TypeError, ValueError) as e:
            raise FormatError(f"{where}: {e}") from None
    try:
        return Potential(q, terms, order)
    except QuiverError as e:
        raise FormatError(str(e)) from None


def action_to_json(g: CyclicAction) -> dict:
    return {
        "order": g.order,
        "vertex_map": dict(g.vertex_map),
        "arrow_map": {a: {"arrow": img.arrow, "zeta_exp": img.zeta_exp} for a, img in g.arrow_map.items()},
    }


def action_from_json(data: Any, quiver: Quiver) -> CyclicAction:
    order = _require(data, "order", int, "action")
    vmap = _require(data, "vertex_map", dict, "action")
    amap = {}
    for a, img in _require(data, "arrow_map", dict, "action").items():
        where = f"arrow_map[{a!r}]"
        exp = img.get("zeta_exp", 0) if isinstance(img, dict) else None
        if isinstance(exp, bool) or not isinstance(exp, int):
            raise FormatError(f"{where}: zeta_exp must be an integer")
        amap[a] = ArrowImage(_ident(_require(img, "arrow", (str, int), where), where), exp)
    try:
        return CyclicAction(quiver, order, {str(k): _ident(v, "vertex_map") for k, v in vmap.items()}, amap)
    except ActionError as e:
        raise FormatError(str(e)) from None


def skew_provenance(skew) -> dict:
    classes = skew.arrow_classes
    return {
        "representatives": {"free": list(skew.reps.primary), "fixed": list(skew.reps.fixed)},
        "vertices": {k: {"rep": v, "mu": mu} for k, (v, mu) in skew.vertex_origin.items()},
        "arrows": {k: {"rep": a, "mu": mu, "type": classes[a].kind, "t": classes[a].t, "b": classes[a].b}
                   for k, (a, mu) in skew.arrow_origin.items()},
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(q: Quiver, labels: dict[str, str] | None = None, highlight: set[str] | None = None,
           name: str = "Q") -> str:
    """Graphviz source; `labels` annotates arrows, `highlight` dashes them."""
    labels = labels or {}
    highlight = highlight or set()
    lines = [f"digraph {_dot_id(name)} {{"]
    for v in q.vertices:
        lines.append(f"  {_dot_id(v)};")
    for a in q.arrows.values():
        attrs = [f"label={_dot_id(labels.get(a.id, a.id))}"]
        if a.id in highlight:
            attrs.append("style=dashed")
        lines.append(f"  {_dot_id(a.src)} -> {_dot_id(a.tgt)} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
