"""JSON, DOT and plain-text renderings of results."""

from __future__ import annotations

import json
from typing import Sequence

from . import lattice as L
from .conics import ConicClass, SingularConicFiber
from .surface import FIBER_COMPONENT, SECTION, NamedCurve, SurfaceModel, intersection_graph

# sections are open circles, (-2)-curves filled discs, other genus-0 curves stars
_NODE_STYLE = {
    SECTION: 'shape=circle, style=solid',
    FIBER_COMPONENT: 'shape=circle, style=filled, fillcolor=black, fontcolor=white',
}
_OTHER_STYLE = "shape=star"


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def format_divisor(support: Sequence[tuple[NamedCurve, int]]) -> str:
    return " + ".join(f"{m}{c.label}" if m != 1 else c.label for c, m in support)


def fiber_to_dict(f: SingularConicFiber) -> dict:
    return f.to_dict()


def bundles_to_dict(m: SurfaceModel, bound: int, bundles) -> dict:
    return {
        "model": m.name,
        "bound": bound,
        "nef": "against declared inventory",
        "bundles": [
            {"class": cc.to_json(), "fibers": [fiber_to_dict(f) for f in fibers]}
            for cc, fibers in bundles
        ],
    }


def _support_dot_body(support, prefix: str, indent: str) -> list[str]:
    lines = []
    for i, (c, m) in enumerate(support):
        style = _NODE_STYLE.get(c.role, _OTHER_STYLE)
        lines.append(f'{indent}{prefix}{i} [label={_q(f"{c.label} ({m})")}, {style}];')
    for i, (c, _) in enumerate(support):
        for j in range(i + 1, len(support)):
            w = L.intersect(c.cls, support[j][0].cls)
            if w > 0:
                attr = f" [label={_q(str(w))}]" if w != 1 else ""
                lines.append(f"{indent}{prefix}{i} -- {prefix}{j}{attr};")
    return lines


def fibers_to_dot(name: str, fibers: Sequence[SingularConicFiber]) -> str:
    lines = [f"graph {_q(name)} {{"]
    for k, f in enumerate(fibers):
        lines.append(f"  subgraph cluster_{k} {{")
        lines.append(f"    label={_q(f'{f.type}: {format_divisor(f.support)}')};")
        lines.extend(_support_dot_body(f.support, f"f{k}_", "    "))
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def bundles_to_dot(m: SurfaceModel, bundles) -> str:
    fibers = [f for _, fs in bundles for f in fs]
    return fibers_to_dot(f"{m.name}_bundles", fibers)


def model_to_dot(m: SurfaceModel, curves: Sequence[NamedCurve]) -> str:
    g = intersection_graph(curves)
    index = {c.label: i for i, c in enumerate(curves)}
    lines = [f"graph {_q(m.name)} {{"]
    for c in curves:
        style = _NODE_STYLE.get(c.role, _OTHER_STYLE)
        lines.append(f"  n{index[c.label]} [label={_q(c.label)}, {style}];")
    for u, v, w in sorted(g.edges(data="weight"), key=lambda e: (index[e[0]], index[e[1]])):
        i, j = sorted((index[u], index[v]))
        attr = f" [label={_q(str(w))}]" if w != 1 else ""
        lines.append(f"  n{i} -- n{j}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def bundles_to_text(m: SurfaceModel, bundles) -> str:
    out = [f"{m.name}: {len(bundles)} conic class(es), nef against declared inventory"]
    for cc, fibers in bundles:
        out.append(f"{cc.cls}  [{len(fibers)} singular fiber(s)]")
        for f in fibers:
            out.append(f"  {str(f.type):<4} {format_divisor(f.support)}")
    return "\n".join(out) + "\n"


def conic_class_to_dict(cc: ConicClass) -> dict:
    return {"class": cc.to_json(), "checked_against": list(cc.evidence)}
