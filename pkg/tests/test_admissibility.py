import pytest
from hypothesis import given
from hypothesis import strategies as st

from resconic.admissibility import EXCLUDED, POSSIBLE, admits, family_of
from resconic.conics import FiberType
from resconic.errors import InvalidConfiguration
from resconic.kodaira import KodairaType, euler_number, parse_config, validate_config

TABLE = [
    ("II*, II", {"a2": EXCLUDED, "an": False, "d3": False, "dm": True}),
    ("II, 10I1", {"a2": POSSIBLE, "an": False, "d3": False, "dm": False}),
    ("IV, II, 6I1", {"a2": POSSIBLE, "an": True, "d3": False, "dm": False}),
    ("I7, II, 3I1", {"a2": POSSIBLE, "an": True, "d3": False, "dm": True}),
    ("I2*, III, I1", {"a2": POSSIBLE, "an": True, "d3": True, "dm": True}),
    ("III*, 3I1", {"a2": POSSIBLE, "an": True, "d3": False, "dm": True}),
]


@pytest.mark.parametrize("cfg,want", TABLE)
def test_table(cfg, want):
    r = admits(parse_config(cfg))
    assert {k: getattr(r, k) for k in want} == want
    assert set(r.reasons) == {"a2", "an", "d3", "dm"}


def test_rank_reported():
    assert admits(parse_config("III*, 3I1")).rank == 1
    assert admits(parse_config("II*, II")).rank == 0


def test_invalid_configuration():
    with pytest.raises(InvalidConfiguration):
        admits(parse_config("II*, II*"))
    with pytest.raises(InvalidConfiguration):
        admits(parse_config("I1"))


def test_admitted_kinds():
    assert admits(parse_config("II*, II")).admitted_kinds() == {"Dm"}
    assert admits(parse_config("I2*, III, I1")).admitted_kinds() == {"A2", "An", "D3", "Dm"}


def test_family_of():
    assert [family_of(FiberType.parse(s)) for s in ("A2", "A3", "D3", "D4", "D9")] == \
        ["A2", "An", "D3", "Dm", "Dm"]


SMALL = ["I1", "I2", "I3", "I4", "I5", "I6", "II", "III", "IV", "I0*", "I1*", "IV*", "III*", "II*"]


@st.composite
def valid_configs(draw):
    """Random fiber configurations with Euler sum 12 and nonnegative rank."""
    cfg = []
    while sum(euler_number(t) for t in cfg) < 12:
        room = 12 - sum(euler_number(t) for t in cfg)
        options = [KodairaType.parse(s) for s in SMALL if euler_number(KodairaType.parse(s)) <= room]
        cfg.append(draw(st.sampled_from(options)))
    if not validate_config(cfg).ok:
        cfg = [KodairaType.parse("I1")] * 12
    return tuple(cfg)


@given(valid_configs())
def test_verdicts_follow_the_configuration(cfg):
    r = admits(cfg)
    reducible = [t for t in cfg if t.reducible]
    assert (r.a2 == EXCLUDED) == (r.rank == 0)
    assert r.d3 == (len(reducible) >= 2)
    assert r.an == any(str(t) != "II*" for t in reducible)
    assert r.dm == any(not t.reduced or (t.family == "I" and t.n >= 4) for t in cfg)
    # D3 requires two reducible fibers, which always leaves an An witness
    assert not r.d3 or r.an
