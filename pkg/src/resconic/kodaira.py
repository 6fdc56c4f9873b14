"""Kodaira fiber types: intersection graphs, multiplicities, configurations.

Node orderings (fixed, so multiplicity vectors are reproducible):

* ``I1``, ``II``: one node of self-intersection 0.
* ``I2``, ``III``: two nodes joined by an edge of weight 2.
* ``IV``: three nodes meeting pairwise once.
* ``In`` (n >= 3): the cycle ``C0 - C1 - ... - C(n-1) - C0``.
* ``In*``: central chain ``C0..Cn`` (multiplicity 2), then two leaves on
  ``C0`` and two leaves on ``Cn`` (multiplicity 1).  For ``I0*`` all four
  leaves hang on ``C0``.
* ``IV*``, ``III*``, ``II*``: the long chain first, then the branch, read
  away from the chain.  ``II*`` is ``(1,2,3,4,5,6,4,2; 3)``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ModelFormatError, NegativeRank, NotAFiberGraph
from .linalg import primitive_integer, rational_kernel

FAMILIES = ("I", "I*", "II", "III", "IV", "II*", "III*", "IV*")

_TAG_RE = re.compile(r"^(?:(I)(\d+)(\*?)|(II|III|IV)(\*?))$")
_CONFIG_ITEM_RE = re.compile(r"^(\d+)?\s*([IV]+\d*\*?)$")


@dataclass(frozen=True, order=True)
class KodairaType:
    family: str
    n: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown Kodaira family {self.family!r}")
        if self.family == "I" and self.n < 1:
            raise ValueError("I_n needs n >= 1")
        if self.family == "I*" and self.n < 0:
            raise ValueError("I_n* needs n >= 0")
        if self.family not in ("I", "I*") and self.n != 0:
            raise ValueError(f"{self.family} takes no parameter")

    @classmethod
    def parse(cls, tag: str) -> KodairaType:
        m = _TAG_RE.match(tag.strip())
        if not m:
            raise ModelFormatError(f"unrecognised Kodaira tag {tag!r}")
        if m.group(1):
            n = int(m.group(2))
            family = "I*" if m.group(3) else "I"
            try:
                return cls(family, n)
            except ValueError as exc:
                raise ModelFormatError(str(exc)) from None
        return cls(m.group(4) + m.group(5))

    def __str__(self) -> str:
        if self.family == "I":
            return f"I{self.n}"
        if self.family == "I*":
            return f"I{self.n}*"
        return self.family

    @property
    def n_components(self) -> int:
        return {
            "I": self.n,
            "I*": self.n + 5,
            "II": 1,
            "III": 2,
            "IV": 3,
            "IV*": 7,
            "III*": 8,
            "II*": 9,
        }[self.family]

    @property
    def reducible(self) -> bool:
        return self.n_components >= 2

    @property
    def reduced(self) -> bool:
        return self.family in ("I", "II", "III", "IV")


@dataclass(frozen=True)
class FiberGraph:
    """Weighted intersection graph of a fiber's components.

    ``edges`` maps ``(i, j)`` with ``i < j`` to the intersection number.
    """

    tag: KodairaType
    labels: tuple[str, ...]
    self_int: tuple[int, ...]
    mults: tuple[int, ...]
    edges: dict = field(hash=False, compare=True)

    def __len__(self) -> int:
        return len(self.labels)

    def pairing(self, i: int, j: int) -> int:
        if i == j:
            return self.self_int[i]
        return self.edges.get((min(i, j), max(i, j)), 0)

    def gram(self) -> list[list[int]]:
        k = len(self)
        return [[self.pairing(i, j) for j in range(k)] for i in range(k)]

    def fiber_dot(self, i: int) -> int:
        """``F.C_i`` for the full fiber ``F``."""
        return sum(m * self.pairing(i, j) for j, m in enumerate(self.mults))

    def simple_components(self) -> list[int]:
        return [i for i, m in enumerate(self.mults) if m == 1]

    def neighbours(self, i: int) -> list[int]:
        return [j for j in range(len(self)) if j != i and self.pairing(i, j) > 0]

    def to_dot(self, name: str | None = None) -> str:
        name = name or f"fiber_{self.tag}"
        lines = [f'graph "{name}" {{', "  node [shape=circle, style=filled, fillcolor=black, fontcolor=white];"]
        for i, (lab, m) in enumerate(zip(self.labels, self.mults)):
            lines.append(f'  n{i} [label="{lab} ({m})"];')
        for (i, j), w in sorted(self.edges.items()):
            attr = f' [label="{w}"]' if w != 1 else ""
            lines.append(f"  n{i} -- n{j}{attr};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _edges_from(pairs: Iterable[tuple[int, int]], weight: int = 1) -> dict:
    return {(min(i, j), max(i, j)): weight for i, j in pairs}


def _chain_then_branch(chain_len: int, attach: int, branch_len: int) -> dict:
    edges = [(i, i + 1) for i in range(chain_len - 1)]
    prev = attach
    for b in range(branch_len):
        node = chain_len + b
        edges.append((prev, node))
        prev = node
    return _edges_from(edges)


# Multiplicity tables, in the node order documented above.
_EXCEPTIONAL_MULTS = {
    "IV*": (1, 2, 3, 2, 1, 2, 1),
    "III*": (1, 2, 3, 4, 3, 2, 1, 2),
    "II*": (1, 2, 3, 4, 5, 6, 4, 2, 3),
}


def build_fiber_graph(t: KodairaType | str) -> FiberGraph:
    if isinstance(t, str):
        t = KodairaType.parse(t)
    k = t.n_components
    labels = tuple(f"C{i}" for i in range(k))
    if k == 1:
        return FiberGraph(t, labels, (0,), (1,), {})
    self_int = (-2,) * k
    fam = t.family
    if (fam == "I" and t.n == 2) or fam == "III":
        return FiberGraph(t, labels, self_int, (1, 1), {(0, 1): 2})
    if fam == "IV":
        return FiberGraph(t, labels, self_int, (1, 1, 1), _edges_from([(0, 1), (0, 2), (1, 2)]))
    if fam == "I":
        edges = _edges_from([(i, (i + 1) % k) for i in range(k)])
        return FiberGraph(t, labels, self_int, (1,) * k, edges)
    if fam == "I*":
        n = t.n
        chain = [(i, i + 1) for i in range(n)]
        a0, a1, b0, b1 = n + 1, n + 2, n + 3, n + 4
        legs = [(0, a0), (0, a1), (n, b0), (n, b1)]
        mults = (2,) * (n + 1) + (1,) * 4
        return FiberGraph(t, labels, self_int, mults, _edges_from(chain + legs))
    if fam == "IV*":
        edges = _chain_then_branch(5, 2, 2)
    elif fam == "III*":
        edges = _chain_then_branch(7, 3, 1)
    else:  # II*
        edges = _chain_then_branch(8, 5, 1)
    return FiberGraph(t, labels, self_int, _EXCEPTIONAL_MULTS[fam], edges)


def fiber_multiplicities(gram: Sequence[Sequence[int]]) -> list[int]:
    """Primitive positive null vector of a fiber's intersection matrix.

    Raises ``NotAFiberGraph`` unless the kernel is one-dimensional and spanned
    by a vector with all entries of one strict sign.
    """
    kernel = rational_kernel(gram)
    if len(kernel) != 1:
        raise NotAFiberGraph(f"kernel has dimension {len(kernel)}, expected 1")
    v = primitive_integer(kernel[0])
    if all(x < 0 for x in v):
        v = [-x for x in v]
    if not all(x > 0 for x in v):
        raise NotAFiberGraph(f"null vector {v} is not strictly positive")
    return v


def euler_number(t: KodairaType) -> int:
    if t.family == "I":
        return t.n
    if t.family == "I*":
        return t.n + 6
    return {"II": 2, "III": 3, "IV": 4, "IV*": 8, "III*": 9, "II*": 10}[t.family]


FiberConfiguration = tuple  # tuple[KodairaType, ...]


def parse_config(items: Iterable[str] | str) -> tuple[KodairaType, ...]:
    """Parse ``["II*", "II"]`` or ``"IV, II, 6I1"``; a leading count repeats a type."""
    if isinstance(items, str):
        items = [s for s in re.split(r"[,\s]+", items.strip().strip("()")) if s]
    out: list[KodairaType] = []
    for item in items:
        if not isinstance(item, str):
            raise ModelFormatError(f"configuration entries must be strings, got {item!r}")
        m = _CONFIG_ITEM_RE.match(item.strip())
        if not m:
            raise ModelFormatError(f"unrecognised configuration entry {item!r}")
        count = int(m.group(1)) if m.group(1) else 1
        out.extend([KodairaType.parse(m.group(2))] * count)
    return tuple(out)


def format_config(config: Sequence[KodairaType]) -> str:
    counts = Counter(config)
    seen: list[KodairaType] = []
    for t in config:
        if t not in seen:
            seen.append(t)
    parts = [f"{counts[t]}{t}" if counts[t] > 1 else str(t) for t in seen]
    return "(" + ", ".join(parts) + ")"


def mw_rank(config: Sequence[KodairaType]) -> int:
    """Shioda-Tate: ``8 - sum(components - 1)`` over the fibers."""
    rank = 8 - sum(t.n_components - 1 for t in config)
    if rank < 0:
        raise NegativeRank(f"configuration {format_config(config)} has negative rank {rank}")
    return rank


@dataclass
class ConfigReport:
    config: tuple[KodairaType, ...]
    euler: int
    rank: int | None
    reducible: list[KodairaType]
    nonreduced: list[KodairaType]
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def extremal(self) -> bool:
        return self.rank == 0

    def to_dict(self) -> dict:
        return {
            "config": [str(t) for t in self.config],
            "euler": self.euler,
            "rank": self.rank,
            "reducible": [str(t) for t in self.reducible],
            "nonreduced": [str(t) for t in self.nonreduced],
            "ok": self.ok,
            "failures": list(self.failures),
        }


def validate_config(config: Sequence[KodairaType]) -> ConfigReport:
    config = tuple(config)
    failures = []
    euler = sum(euler_number(t) for t in config)
    if euler != 12:
        failures.append(f"Euler numbers sum to {euler}, expected 12")
    try:
        rank = mw_rank(config)
    except NegativeRank as exc:
        rank = None
        failures.append(str(exc))
    return ConfigReport(
        config=config,
        euler=euler,
        rank=rank,
        reducible=[t for t in config if t.reducible],
        nonreduced=[t for t in config if not t.reduced],
        failures=failures,
    )
