"""End-to-end checks over the bundled example surfaces.

Each entry records the conic class built from the pencil of lines through
``P1`` and the singular fibers it must have, as typed supports.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .admissibility import admits, family_of
from .conics import enumerate_singular_fibers, verify_conic_class
from .construction import conic_class_from_pencil
from .lattice import DivisorClass
from .modelfile import load_model
from .surface import validate_model

LINES_THROUGH_P1 = DivisorClass.of(1, [1])


def _fiber(type_: str, *support: tuple[str, int]) -> tuple:
    return (type_, tuple(sorted(support)))


def _a(*labels: str) -> tuple:
    kind = "A2" if len(labels) == 2 else f"A{len(labels)}"
    return _fiber(kind, *((x, 1) for x in labels))


@dataclass(frozen=True)
class CorpusEntry:
    fixture: str
    config: str
    rank: int
    admits: dict
    target: DivisorClass
    fibers: frozenset


CORPUS = (
    CorpusEntry(
        "only_type_5", "(II*, II)", 0,
        {"a2": "excluded", "an": False, "d3": False, "dm": True},
        LINES_THROUGH_P1,
        frozenset({_fiber("D9", ("E9", 2), ("E8", 2), ("E7", 2), ("E6", 2), ("E5", 2), ("E4", 2),
                          ("E3", 2), ("E2", 1), ("L", 1))}),
    ),
    CorpusEntry(
        "only_type_2", "(II, 10I1)", 8,
        {"a2": "possible", "an": False, "d3": False, "dm": False},
        LINES_THROUGH_P1,
        frozenset(_a(f"L1{i}", f"E{i}") for i in range(2, 10)),
    ),
    CorpusEntry(
        "types_2_and_3", "(IV, II, 6I1)", 6,
        {"a2": "possible", "an": True, "d3": False, "dm": False},
        LINES_THROUGH_P1,
        frozenset([_a(f"L1{i}", f"E{i}") for i in (2, 3, 4, 5, 7, 8)] + [_a("E6", "L1", "E9")]),
    ),
    CorpusEntry(
        "i7_ii_3i1", "(I7, II, 3I1)", 2,
        {"a2": "possible", "an": True, "d3": False, "dm": True},
        LINES_THROUGH_P1,
        frozenset({
            _fiber("D4", ("G2", 2), ("F2", 2), ("E2", 1), ("L1", 1)),
            _a("E4", "L2", "E3", "F3"),
            _a("L''", "E5"),
            _a("T", "F1"),
        }),
    ),
    CorpusEntry(
        "i2s_iii_i1", "(I2*, III, I1)", 1,
        {"a2": "possible", "an": True, "d3": True, "dm": True},
        LINES_THROUGH_P1,
        frozenset({
            _a("E2", "L", "E3"),
            _fiber("D3", ("E4", 1), ("F4", 2), ("L'", 1)),
            _fiber("D5", ("I1", 2), ("H1", 2), ("G1", 2), ("L''", 1), ("F1", 1)),
        }),
    ),
)


@dataclass
class CorpusResult:
    fixture: str
    config: str
    checks: dict = field(default_factory=dict)
    fibers: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "fixture": self.fixture,
            "config": self.config,
            "ok": self.ok,
            "checks": dict(self.checks),
            "fibers": self.fibers,
        }


def run_entry(entry: CorpusEntry) -> CorpusResult:
    t0 = time.perf_counter()
    res = CorpusResult(entry.fixture, entry.config)
    m = load_model(f"builtin:{entry.fixture}")
    report = validate_model(m)
    res.checks["model_valid"] = report.ok
    res.checks["rank"] = report.config.rank == entry.rank
    adm = admits(m.config)
    res.checks["admissibility"] = all(getattr(adm, k) == v for k, v in entry.admits.items())
    cc = verify_conic_class(entry.target, m)
    res.checks["pencil_class"] = conic_class_from_pencil(m, m.pencils[0]).cls == cc.cls
    fibers = enumerate_singular_fibers(m, cc)
    res.fibers = [f.to_dict() for f in fibers]
    res.checks["fibers"] = frozenset(f.key() for f in fibers) == entry.fibers and len(fibers) == len(entry.fibers)
    res.checks["types_admissible"] = {family_of(f.type) for f in fibers} <= adm.admitted_kinds()
    res.seconds = time.perf_counter() - t0
    return res


def run_corpus() -> list[CorpusResult]:
    return [run_entry(e) for e in CORPUS]
