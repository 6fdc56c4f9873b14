"""Rational elliptic surfaces as blowup data.

A ``SurfaceModel`` is declarative: it lists the nine base points (with
infinitely-near relations), named curves given by how their plane images
pass through the base points, the Kodaira configuration, and which curves
make up each declared reducible fiber.  Everything downstream is computed
relative to this declared inventory.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import networkx as nx

from . import lattice as L
from .errors import InconsistentProximity, ModelFormatError, NegativeEdge
from .kodaira import ConfigReport, KodairaType, build_fiber_graph, format_config, validate_config
from .lattice import DivisorClass

SECTION = "section"
FIBER_COMPONENT = "fiber-component"
OTHER = "other"
ROLES = (SECTION, FIBER_COMPONENT, OTHER)

CURVE_KINDS = ("exc", "line", "conic", "cubic", "class")
_DEGREE = {"line": 1, "conic": 2, "cubic": 3}


@dataclass(frozen=True)
class BasePointForest:
    """``near[i-1]`` is the index of the point ``p_i`` is infinitely near to (or None)."""

    near: tuple

    def __post_init__(self):
        if len(self.near) != L.N_POINTS:
            raise ModelFormatError(f"a forest needs exactly {L.N_POINTS} points, got {len(self.near)}")
        for i, j in enumerate(self.near, start=1):
            if j is None:
                continue
            if not isinstance(j, int) or not 1 <= j < i:
                raise ModelFormatError(f"point {i} can only be infinitely near an earlier point, got {j!r}")

    @classmethod
    def plane(cls) -> BasePointForest:
        return cls((None,) * L.N_POINTS)

    @classmethod
    def chain(cls) -> BasePointForest:
        return cls((None,) + tuple(range(1, L.N_POINTS)))

    def proximate(self, i: int) -> list[int]:
        return [j for j, k in enumerate(self.near, start=1) if k == i]

    def is_plane_point(self, i: int) -> bool:
        return self.near[i - 1] is None


@dataclass(frozen=True)
class CurveSpec:
    label: str
    kind: str
    point: int | None = None
    through: tuple = ()
    coeffs: tuple | None = None
    role: str | None = None

    def __post_init__(self):
        if self.kind not in CURVE_KINDS:
            raise ModelFormatError(f"curve {self.label!r}: unknown kind {self.kind!r}")
        if self.role is not None and self.role not in ROLES:
            raise ModelFormatError(f"curve {self.label!r}: unknown role {self.role!r}")


@dataclass(frozen=True)
class NamedCurve:
    label: str
    cls: DivisorClass
    role: str

    @property
    def self_int(self) -> int:
        return L.self_intersection(self.cls)


def role_of(cls: DivisorClass) -> str:
    sq, k = L.self_intersection(cls), L.intersect(cls, L.CANONICAL)
    if sq == -1 and k == -1:
        return SECTION
    if sq == -2 and k == 0:
        return FIBER_COMPONENT
    return OTHER


def exceptional_component_class(forest: BasePointForest, i: int) -> DivisorClass:
    """Class of the strict transform of the i-th exceptional curve: ``e_i - sum e_j``
    over the points ``p_j`` blown up on it."""
    if not 1 <= i <= L.N_POINTS:
        raise InconsistentProximity(f"no base point {i}")
    cls = L.exceptional(i)
    for j in forest.proximate(i):
        cls = cls - L.exceptional(j)
    return cls


def strict_transform_class(spec: CurveSpec, forest: BasePointForest) -> DivisorClass:
    if spec.kind == "exc":
        if spec.point is None:
            raise ModelFormatError(f"curve {spec.label!r}: 'exc' needs a point")
        return exceptional_component_class(forest, spec.point)
    if spec.kind == "class":
        if spec.coeffs is None:
            raise ModelFormatError(f"curve {spec.label!r}: 'class' needs coefficients")
        return DivisorClass(tuple(spec.coeffs))

    degree = _DEGREE[spec.kind]
    mults = [0] * L.N_POINTS
    for p, m in spec.through:
        if not 1 <= p <= L.N_POINTS:
            raise InconsistentProximity(f"curve {spec.label!r}: no base point {p}")
        if mults[p - 1]:
            raise InconsistentProximity(f"curve {spec.label!r}: point {p} listed twice")
        if not 1 <= m <= degree:
            raise InconsistentProximity(f"curve {spec.label!r}: multiplicity {m} at point {p} "
                                        f"impossible for degree {degree}")
        mults[p - 1] = m
    for i in range(1, L.N_POINTS + 1):
        # proximity inequality: m_i >= sum of multiplicities at points proximate to p_i
        downstream = sum(mults[j - 1] for j in forest.proximate(i))
        if downstream > mults[i - 1]:
            raise InconsistentProximity(
                f"curve {spec.label!r}: multiplicity {mults[i - 1]} at point {i} is less than "
                f"{downstream} at the points infinitely near it")
    return DivisorClass.of(degree, mults)


@dataclass(frozen=True)
class SurfaceModel:
    name: str
    forest: BasePointForest
    curves: tuple
    config: tuple
    fibers: dict = field(hash=False, default_factory=dict)
    specs: tuple = ()
    pencils: tuple = ()
    description: str = ""

    def curve(self, label: str) -> NamedCurve:
        for c in self.curves:
            if c.label == label:
                return c
        raise KeyError(label)

    def labels(self) -> list[str]:
        return [c.label for c in self.curves]

    def declared_role(self, label: str) -> str | None:
        for s in self.specs:
            if s.label == label:
                return s.role
        return None


def build_model(name: str, forest: BasePointForest, specs: Sequence[CurveSpec], config,
                fibers: dict | None = None, pencils: Sequence = (), description: str = "") -> SurfaceModel:
    seen = set()
    curves = []
    for s in specs:
        if s.label in seen:
            raise ModelFormatError(f"duplicate curve label {s.label!r}")
        seen.add(s.label)
        cls = strict_transform_class(s, forest)
        curves.append(NamedCurve(s.label, cls, role_of(cls)))
    fibers = dict(fibers or {})
    for key, members in fibers.items():
        for lab, _ in members:
            if lab not in seen:
                raise ModelFormatError(f"fiber {key!r} refers to unknown curve {lab!r}")
    return SurfaceModel(name, forest, tuple(curves), tuple(config), fibers, tuple(specs),
                        tuple(pencils), description)


def negative_curve_inventory(m: SurfaceModel) -> list[NamedCurve]:
    return [c for c in m.curves if c.self_int < 0]


def intersection_graph(curves: Sequence[NamedCurve]) -> nx.Graph:
    """Nodes are curve labels; an edge carries the (positive) intersection number."""
    g = nx.Graph()
    for c in curves:
        g.add_node(c.label, self_int=c.self_int, role=c.role)
    for i, c in enumerate(curves):
        for d in curves[i + 1:]:
            w = L.intersect(c.cls, d.cls)
            if w < 0:
                raise NegativeEdge(f"{c.label}.{d.label} = {w}: distinct integral curves cannot meet negatively")
            if w > 0:
                g.add_edge(c.label, d.label, weight=w)
    return g


def fiber_tag(key: str) -> KodairaType:
    """Fiber keys are a Kodaira tag, optionally suffixed ``#k`` to tell repeats apart."""
    return KodairaType.parse(key.split("#", 1)[0])


def _matches_kodaira(members: list[tuple[NamedCurve, int]], tag: KodairaType) -> bool:
    ref = build_fiber_graph(tag)
    g_ref = nx.Graph()
    for i in range(len(ref)):
        g_ref.add_node(i, self_int=ref.self_int[i], mult=ref.mults[i])
    for (i, j), w in ref.edges.items():
        g_ref.add_edge(i, j, weight=w)
    g = nx.Graph()
    for i, (c, mult) in enumerate(members):
        g.add_node(i, self_int=c.self_int, mult=mult)
    for i, (c, _) in enumerate(members):
        for j in range(i + 1, len(members)):
            w = L.intersect(c.cls, members[j][0].cls)
            if w:
                g.add_edge(i, j, weight=w)

    def signature(graph):
        return sorted((d["self_int"], d["mult"], tuple(sorted(graph[v][u]["weight"] for u in graph[v])))
                      for v, d in graph.nodes(data=True))

    if signature(g) != signature(g_ref):
        return False
    return nx.is_isomorphic(
        g, g_ref,
        node_match=lambda a, b: a["self_int"] == b["self_int"] and a["mult"] == b["mult"],
        edge_match=lambda a, b: a["weight"] == b["weight"],
    )


@dataclass
class ModelReport:
    name: str
    config: ConfigReport
    failures: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    sections: list[str] = field(default_factory=list)
    fiber_components: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and self.config.ok

    def to_dict(self) -> dict:
        return {
            "model": self.name,
            "ok": self.ok,
            "config": self.config.to_dict(),
            "sections": list(self.sections),
            "fiber_components": list(self.fiber_components),
            "failures": list(self.failures),
            "warnings": list(self.warnings),
        }


def validate_model(m: SurfaceModel) -> ModelReport:
    report = ModelReport(m.name, validate_config(m.config))
    fail = report.failures.append

    for c in m.curves:
        declared = m.declared_role(c.label)
        if declared is not None and declared != c.role:
            fail(f"{c.label}: declared {declared} but class {c.cls} has square {c.self_int} "
                 f"and K-degree {L.intersect(c.cls, L.CANONICAL)}")
        if c.self_int < 0:
            if c.role == OTHER:
                fail(f"{c.label}: negative curve of class {c.cls} is neither a (-1)- nor a (-2)-curve")
            elif L.arithmetic_genus(c.cls) != 0:
                fail(f"{c.label}: arithmetic genus {L.arithmetic_genus(c.cls)} != 0")
    inventory = negative_curve_inventory(m)
    report.sections = [c.label for c in inventory if c.role == SECTION]
    report.fiber_components = [c.label for c in inventory if c.role == FIBER_COMPONENT]

    try:
        intersection_graph(list(m.curves))
    except NegativeEdge as exc:
        fail(str(exc))

    available = list(m.config)
    fiber_members: dict[str, list[tuple[NamedCurve, int]]] = {}
    for key, members in m.fibers.items():
        try:
            tag = fiber_tag(key)
        except ModelFormatError as exc:
            fail(f"fiber {key!r}: {exc}")
            continue
        if tag in available:
            available.remove(tag)
        else:
            fail(f"fiber {key!r}: type {tag} not available in configuration {format_config(m.config)}")
        if not tag.reducible:
            fail(f"fiber {key!r}: only reducible fibers are declared")
            continue
        resolved = [(m.curve(lab), mult) for lab, mult in members]
        fiber_members[key] = resolved
        for c, mult in resolved:
            if c.role != FIBER_COMPONENT:
                fail(f"fiber {key!r}: member {c.label} is not a (-2)-curve")
            if mult < 1:
                fail(f"fiber {key!r}: member {c.label} has multiplicity {mult}")
        if len({c.label for c, _ in resolved}) != len(resolved):
            fail(f"fiber {key!r}: repeated member")
        cls = L.total((c.cls, mult) for c, mult in resolved)
        if cls != L.ANTICANONICAL:
            fail(f"fiber {key!r}: members sum to {cls}, expected -K = {L.ANTICANONICAL}")
        if not _matches_kodaira(resolved, tag):
            fail(f"fiber {key!r}: intersection graph does not match {tag}")
        if L.intersect(cls, L.CANONICAL) % 2:
            fail(f"fiber {key!r}: odd canonical degree")

    keys = list(fiber_members)
    for i, k1 in enumerate(keys):
        for k2 in keys[i + 1:]:
            for c1, _ in fiber_members[k1]:
                for c2, _ in fiber_members[k2]:
                    if c1.label == c2.label:
                        fail(f"{c1.label} is declared in fibers {k1!r} and {k2!r}")
                    elif L.intersect(c1.cls, c2.cls) != 0:
                        fail(f"{c1.label} ({k1}) meets {c2.label} ({k2})")

    in_fibers = {c.label for ms in fiber_members.values() for c, _ in ms}
    for lab in report.fiber_components:
        if lab not in in_fibers:
            report.warnings.append(f"(-2)-curve {lab} is not assigned to a declared fiber")
    for tag in available:
        if tag.reducible:
            report.warnings.append(f"reducible fiber {tag} is not declared; inventory may be incomplete")

    for lab in report.sections:
        p = m.curve(lab)
        for key, members in fiber_members.items():
            hits = [(c, mult, L.intersect(p.cls, c.cls)) for c, mult in members]
            hits = [h for h in hits if h[2] != 0]
            if len(hits) != 1 or hits[0][2] != 1 or hits[0][1] != 1:
                desc = ", ".join(f"{c.label}(x{mult}):{w}" for c, mult, w in hits) or "nothing"
                fail(f"section {lab} must meet fiber {key!r} once on a simple component; meets {desc}")
    return report
