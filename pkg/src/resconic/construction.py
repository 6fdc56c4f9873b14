"""Conic bundles from plane pencils of lines or conics.

A pencil whose base points all lie among the nine blown-up points pulls back,
after removing the fixed exceptional part, to a base point free pencil of
genus-0 curves.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import lattice as L
from .conics import ConicClass, verify_conic_class
from .errors import BaseLocusNotContained, InconsistentProximity, ModelFormatError
from .surface import SurfaceModel

PENCIL_KINDS = {"lines": 1, "conics": 2}


@dataclass(frozen=True)
class PlanePencil:
    kind: str
    base: tuple  # ((point, multiplicity), ...)

    def __post_init__(self):
        if self.kind not in PENCIL_KINDS:
            raise ModelFormatError(f"unknown pencil kind {self.kind!r}")

    @property
    def degree(self) -> int:
        return PENCIL_KINDS[self.kind]

    def to_dict(self) -> dict:
        return {"kind": self.kind, "base": [list(b) for b in self.base]}


def _check_shape(m: SurfaceModel, q: PlanePencil) -> None:
    points = [p for p, _ in q.base]
    if len(set(points)) != len(points):
        raise InconsistentProximity(f"pencil base lists a point twice: {points}")
    if any(k != 1 for _, k in q.base):
        raise InconsistentProximity("pencil base points are simple")
    used = set(points)
    for p in points:
        parent = m.forest.near[p - 1]
        if parent is not None and parent not in used:
            raise InconsistentProximity(f"pencil passes through point {p} but not through point {parent} "
                                        f"it is infinitely near to")
    if q.kind == "lines":
        # fixing a tangent direction as well leaves a single line (class square -1), not a pencil
        if len(points) != 1:
            raise InconsistentProximity(f"a pencil of lines has exactly one base point, got {points}")
        return
    if sum(k for _, k in q.base) != 4:
        raise InconsistentProximity(f"a pencil of conics has 4 base points, got {points}")


def conic_class_from_pencil(m: SurfaceModel, q: PlanePencil) -> ConicClass:
    """Class ``d*l - sum(m_i*e_i)`` of the moving part of the pulled-back pencil.

    General members are smooth automatically: a line pencil's members are lines,
    and four base points in a conic pencil leave the general member irreducible,
    so no symbolic smoothness check is made.
    """
    missing = [p for p, _ in q.base if not 1 <= p <= L.N_POINTS]
    if missing:
        raise BaseLocusNotContained(f"pencil base points {missing} are not base points of the cubic pencil")
    _check_shape(m, q)
    mults = [0] * L.N_POINTS
    for p, k in q.base:
        mults[p - 1] = k
    d = q.degree
    if d * d != sum(k * k for k in mults) or 3 * d != sum(mults) + 2:
        raise InconsistentProximity(f"pencil {q.to_dict()} does not give a square-zero class of degree 2")
    return verify_conic_class(L.DivisorClass.of(d, mults), m)
