"""Conic classes, the five singular-fiber shapes, and their enumeration.

Nefness is only ever checked against a model's declared inventory of
negative curves; results are complete relative to that inventory.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from . import lattice as L
from .errors import NotAConicFiber, NotNefAgainstInventory, NotSquareZero, WrongAnticanonicalDegree
from .lattice import DivisorClass
from .surface import FIBER_COMPONENT, SECTION, NamedCurve, SurfaceModel, negative_curve_inventory

_KIND_ORDER = {"0": 0, "A": 1, "D": 2}


@dataclass(frozen=True)
class FiberType:
    """``kind`` is ``"0"``, ``"A"`` or ``"D"``; ``n`` is the node count (0 for the smooth type)."""

    kind: str
    n: int = 0

    def __post_init__(self):
        if self.kind == "0":
            ok = self.n == 0
        elif self.kind == "A":
            ok = self.n >= 2
        elif self.kind == "D":
            ok = self.n >= 3
        else:
            ok = False
        if not ok:
            raise ValueError(f"invalid fiber type {self.kind}{self.n}")

    @classmethod
    def parse(cls, s: str) -> FiberType:
        if s in ("0", "Type0"):
            return cls("0")
        return cls(s[0], int(s[1:]))

    def sort_key(self) -> tuple:
        return (_KIND_ORDER[self.kind], self.n)

    def __str__(self) -> str:
        return "0" if self.kind == "0" else f"{self.kind}{self.n}"


TYPE0 = FiberType("0")


@dataclass(frozen=True)
class ConicClass:
    cls: DivisorClass
    evidence: tuple = ()  # labels of inventory curves the class was checked against

    def to_json(self) -> list[int]:
        return self.cls.to_json()


@dataclass(frozen=True)
class SingularConicFiber:
    support: tuple  # ((NamedCurve, multiplicity), ...)
    type: FiberType
    cls: DivisorClass

    def labels(self) -> tuple[str, ...]:
        return tuple(c.label for c, _ in self.support)

    def key(self) -> tuple:
        """Order-independent identity: type plus the sorted (label, multiplicity) pairs."""
        return (str(self.type), tuple(sorted((c.label, m) for c, m in self.support)))

    def sort_key(self) -> tuple:
        return (self.type.sort_key(), tuple(sorted(self.labels())))

    def to_dict(self) -> dict:
        return {"type": str(self.type), "support": [[c.label, m] for c, m in self.support]}


def is_nef_against(d: DivisorClass, inventory: Sequence[NamedCurve]) -> bool:
    return all(L.intersect(d, c.cls) >= 0 for c in inventory)


def verify_conic_class(d: DivisorClass, m: SurfaceModel) -> ConicClass:
    sq = L.self_intersection(d)
    if sq != 0:
        raise NotSquareZero(f"{d} has square {sq}")
    deg = L.anticanonical_degree(d)
    if deg != 2:
        raise WrongAnticanonicalDegree(f"{d} has anticanonical degree {deg}, expected 2")
    inventory = negative_curve_inventory(m)
    for c in inventory:
        w = L.intersect(d, c.cls)
        if w < 0:
            raise NotNefAgainstInventory(f"{d} meets {c.label} negatively ({w})", curve=c.label)
    # a conic class moves in a base point free pencil
    assert L.riemann_roch_chi(d) == 2
    return ConicClass(d, tuple(c.label for c in inventory))


def neighbour_count(support: Sequence[tuple[NamedCurve, int]], label: str) -> int:
    node = next(c for c, _ in support if c.label == label)
    return sum(1 for c, _ in support if c.label != label and L.intersect(node.cls, c.cls) > 0)


def _support_class(support) -> DivisorClass:
    return L.total((c.cls, m) for c, m in support)


def _is_connected(curves: Sequence[NamedCurve]) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j, c in enumerate(curves):
            if j not in seen and L.intersect(curves[i].cls, c.cls) > 0:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(curves)


def _induced_path_order(nodes: list[NamedCurve], start: NamedCurve) -> list[NamedCurve] | None:
    """Order ``nodes`` as an induced path from ``start`` with unit steps, or None."""
    order = [start]
    rest = [c for c in nodes if c is not start]
    while rest:
        last = order[-1]
        nxt = [c for c in rest if L.intersect(last.cls, c.cls) != 0]
        if len(nxt) != 1 or L.intersect(last.cls, nxt[0].cls) != 1:
            return None
        if any(L.intersect(u.cls, nxt[0].cls) != 0 for u in order[:-1]):
            return None
        order.append(nxt[0])
        rest.remove(nxt[0])
    return order


def classify_fiber(support: Sequence[tuple[NamedCurve, int]]) -> FiberType:
    """Match a weighted support against the five conic-fiber shapes.

    Raises ``NotAConicFiber`` with the reason when no shape fits.
    """
    support = list(support)
    if not support:
        raise NotAConicFiber("empty support")
    for c, mult in support:
        if not isinstance(mult, int) or mult < 1:
            raise NotAConicFiber(f"{c.label}: multiplicity must be a positive integer, got {mult!r}")
    labels = [c.label for c, _ in support]
    if len(set(labels)) != len(labels) or len({c.cls for c, _ in support}) != len(support):
        raise NotAConicFiber("repeated curve in support; use a multiplicity instead")

    d = _support_class(support)
    if len(support) == 1:
        (c, mult), = support
        if mult != 1:
            raise NotAConicFiber(f"single curve {c.label} with multiplicity {mult}")
        if L.self_intersection(c.cls) != 0:
            raise NotAConicFiber(f"{c.label} has square {L.self_intersection(c.cls)}, a smooth fiber needs 0")
        if L.intersect(c.cls, L.CANONICAL) != -2 or L.arithmetic_genus(c.cls) != 0:
            raise NotAConicFiber(f"{c.label} is not a genus-0 curve of anticanonical degree 2")
        return TYPE0

    curves = [c for c, _ in support]
    mult = {c.label: k for c, k in support}
    if not _is_connected(curves):
        raise NotAConicFiber("support is disconnected")
    bad = [c.label for c in curves if c.role not in (SECTION, FIBER_COMPONENT)]
    if bad:
        raise NotAConicFiber(f"support curves {bad} are neither sections nor (-2)-curves")
    sections = [c for c in curves if c.role == SECTION]
    roots = [c for c in curves if c.role == FIBER_COMPONENT]
    section_weight = sum(mult[p.label] for p in sections)
    if section_weight != 2:
        raise NotAConicFiber(f"sections carry total multiplicity {section_weight}, expected 2")

    ftype = None
    if len(sections) == 2:
        if any(mult[c.label] != 1 for c in curves):
            raise NotAConicFiber("A-type fibers have all multiplicities 1")
        p, q = sections
        if not roots:
            if L.intersect(p.cls, q.cls) != 1:
                raise NotAConicFiber(f"sections {p.label}, {q.label} meet {L.intersect(p.cls, q.cls)} times")
            ftype = FiberType("A", 2)
        else:
            order = _induced_path_order(curves, p)
            if order is None or order[-1] is not q:
                raise NotAConicFiber("support is not a chain from one section to the other")
            ftype = FiberType("A", len(curves))
    else:
        (p,) = sections
        if any(mult[c.label] not in (1, 2) for c in roots):
            raise NotAConicFiber("D-type multiplicities are 1 or 2")
        doubled = [c for c in roots if mult[c.label] == 2]
        ends = [c for c in roots if mult[c.label] == 1]
        if len(ends) != 2:
            raise NotAConicFiber(f"D-type fibers end in two simple (-2)-curves, found {len(ends)}")
        a, b = ends
        if L.intersect(a.cls, b.cls) != 0:
            raise NotAConicFiber(f"fork curves {a.label}, {b.label} meet")
        order = _induced_path_order([p] + doubled, p)
        if order is None:
            raise NotAConicFiber("doubled part is not a chain starting at the section")
        last = order[-1]
        for e in (a, b):
            if L.intersect(e.cls, last.cls) != 1 or any(L.intersect(e.cls, u.cls) for u in order[:-1]):
                raise NotAConicFiber(f"{e.label} must meet only {last.label}, once")
        ftype = FiberType("D", len(curves))

    # converse direction: the shape is a fiber of the pencil |D|
    for c in curves:
        if L.intersect(d, c.cls) != 0:
            raise NotAConicFiber(f"D.{c.label} = {L.intersect(d, c.cls)} != 0")
    if L.anticanonical_degree(d) != 2:
        raise NotAConicFiber(f"D.(-K) = {L.anticanonical_degree(d)} != 2")
    return ftype


def find_fiber_shapes(curves: Sequence[NamedCurve]) -> list[SingularConicFiber]:
    """Every divisor over ``curves`` whose intersection graph fits a reducible shape."""
    curves = [c for c in curves if c.role in (SECTION, FIBER_COMPONENT)]
    n = len(curves)
    P = [[L.intersect(c.cls, d.cls) for d in curves] for c in curves]
    secs = [i for i in range(n) if curves[i].role == SECTION]
    roots = [i for i in range(n) if curves[i].role == FIBER_COMPONENT]
    found: list[tuple[FiberType, list[tuple[int, int]]]] = []

    for i, j in combinations(secs, 2):
        if P[i][j] == 1:
            found.append((FiberType("A", 2), [(i, 1), (j, 1)]))

    for s in secs:
        for a, b in combinations(roots, 2):
            if P[s][a] == 1 and P[s][b] == 1 and P[a][b] == 0:
                found.append((FiberType("D", 3), [(s, 2), (a, 1), (b, 1)]))

    def root_paths(path: list[int]) -> Iterator[list[int]]:
        last = path[-1]
        for v in roots:
            if v in path or P[last][v] != 1:
                continue
            if any(P[u][v] != 0 for u in path[:-1]):
                continue
            ext = path + [v]
            yield ext
            yield from root_paths(ext)

    for s in secs:
        for path in root_paths([s]):
            body, last = path[:-1], path[-1]
            for t in secs:
                if t > s and P[last][t] == 1 and all(P[u][t] == 0 for u in body):
                    found.append((FiberType("A", len(path) + 1), [(x, 1) for x in path + [t]]))
            forks = [v for v in roots if v not in path and P[last][v] == 1
                     and all(P[u][v] == 0 for u in body)]
            for a, b in combinations(forks, 2):
                if P[a][b] == 0:
                    found.append((FiberType("D", len(path) + 2),
                                  [(x, 2) for x in path] + [(a, 1), (b, 1)]))

    out = []
    for ftype, items in found:
        support = tuple((curves[i], k) for i, k in items)
        out.append(SingularConicFiber(support, ftype, _support_class(support)))
    out.sort(key=SingularConicFiber.sort_key)
    return out


def enumerate_singular_fibers(m: SurfaceModel, target: ConicClass | DivisorClass) -> list[SingularConicFiber]:
    d = target.cls if isinstance(target, ConicClass) else target
    # a fiber of |D| pairs to zero with each of its own components
    candidates = [c for c in negative_curve_inventory(m) if L.intersect(d, c.cls) == 0]
    return [f for f in find_fiber_shapes(candidates) if f.cls == d]


def numeric_conic_classes(bound: int) -> Iterator[DivisorClass]:
    """Classes ``a*l - sum bi*ei`` with ``1 <= a <= bound``, ``0 <= bi <= a``,
    ``D^2 = 0`` and ``D.(-K) = 2``, in lexicographic coefficient order."""
    for a in range(1, bound + 1):
        target_sum, target_sq = 3 * a - 2, a * a

        def rec(prefix: list[int], s: int, q: int) -> Iterator[list[int]]:
            r = L.N_POINTS - len(prefix)
            if r == 0:
                if s == 0 and q == 0:
                    yield prefix
                return
            if s < 0 or q < 0 or s > r * a or q > r * a * a or q < s or q > a * s or s * s > r * q:
                return
            for b in range(0, a + 1):
                yield from rec(prefix + [b], s - b, q - b * b)

        for bs in rec([], target_sum, target_sq):
            yield DivisorClass.of(a, bs)


def enumerate_conic_bundles(m: SurfaceModel, bound: int) -> list[tuple[ConicClass, list[SingularConicFiber]]]:
    """Conic classes from the coefficient box (nef against the inventory) together with
    classes of shape-fitting divisors in the inventory, each with its singular fibers."""
    if bound < 1:
        return []
    inventory = negative_curve_inventory(m)
    classes = {d for d in numeric_conic_classes(bound) if is_nef_against(d, inventory)}
    classes.update(f.cls for f in find_fiber_shapes(inventory) if is_nef_against(f.cls, inventory))
    out = []
    for d in sorted(classes, key=lambda c: c.coeffs):
        cc = verify_conic_class(d, m)
        out.append((cc, enumerate_singular_fibers(m, cc)))
    return out
