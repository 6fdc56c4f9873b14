"""Which conic-fiber types a Kodaira configuration allows.

``a2`` is only ever ``"excluded"`` or ``"possible"``: an extremal fibration has
no A2 fibers, but a positive rank does not guarantee one (``(III*, 3I1)`` has
rank 1 and no A2 fiber).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidConfiguration
from .kodaira import KodairaType, format_config, validate_config

EXCLUDED = "excluded"
POSSIBLE = "possible"


@dataclass
class AdmissibilityReport:
    config: tuple
    rank: int
    a2: str
    an: bool
    d3: bool
    dm: bool
    reasons: dict = field(default_factory=dict)

    def admitted_kinds(self) -> set[str]:
        """Shape families that may occur: 'A2', 'An', 'D3', 'Dm'."""
        out = set()
        if self.a2 == POSSIBLE:
            out.add("A2")
        for name, flag in (("An", self.an), ("D3", self.d3), ("Dm", self.dm)):
            if flag:
                out.add(name)
        return out

    def to_dict(self) -> dict:
        return {
            "config": [str(t) for t in self.config],
            "rank": self.rank,
            "a2": self.a2,
            "an": self.an,
            "d3": self.d3,
            "dm": self.dm,
            "reasons": dict(self.reasons),
        }


def family_of(fiber_type) -> str:
    """Map a classified fiber type to its admissibility family."""
    s = str(fiber_type)
    if s == "A2" or s == "D3":
        return s
    return {"A": "An", "D": "Dm"}[s[0]]


def admits(config) -> AdmissibilityReport:
    report = validate_config(config)
    if not report.ok:
        raise InvalidConfiguration(f"{format_config(report.config)}: " + "; ".join(report.failures))
    rank = report.rank
    reducible = report.reducible
    reasons = {}

    if rank == 0:
        a2 = EXCLUDED
        reasons["a2"] = "extremal: Mordell-Weil rank 0, torsion sections never meet"
    else:
        a2 = POSSIBLE
        reasons["a2"] = f"Mordell-Weil rank {rank} > 0 (necessary condition only)"

    others = [t for t in reducible if t != KodairaType("II*")]
    an = bool(others)
    if an:
        reasons["an"] = f"reducible fiber {others[0]} other than II*"
    elif reducible:
        reasons["an"] = "only reducible fiber is II*, Mordell-Weil group trivial"
    else:
        reasons["an"] = "no reducible fiber"

    d3 = len(reducible) >= 2
    reasons["d3"] = (f"two reducible fibers {reducible[0]}, {reducible[1]}" if d3
                     else f"{len(reducible)} reducible fiber(s), need two")

    triggers = [t for t in report.config if not t.reduced or (t.family == "I" and t.n >= 4)]
    dm = bool(triggers)
    reasons["dm"] = (f"fiber {triggers[0]} is nonreduced or I_n with n >= 4" if dm
                     else "no nonreduced fiber and no I_n with n >= 4")
    return AdmissibilityReport(report.config, rank, a2, an, d3, dm, reasons)
