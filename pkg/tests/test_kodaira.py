import pytest

import oracles
from resconic.errors import InvalidConfiguration, ModelFormatError, NegativeRank, NotAFiberGraph
from resconic.kodaira import (
    KodairaType,
    build_fiber_graph,
    euler_number,
    fiber_multiplicities,
    format_config,
    mw_rank,
    parse_config,
    validate_config,
)

ALL_TAGS = ([f"I{n}" for n in range(1, 10)] + [f"I{n}*" for n in range(5)]
            + ["II", "III", "IV", "IV*", "III*", "II*"])


@pytest.mark.parametrize("tag", ALL_TAGS)
def test_parse_round_trip(tag):
    assert str(KodairaType.parse(tag)) == tag


@pytest.mark.parametrize("bad", ["I", "V", "II**", "I-1", "x"])
def test_parse_rejects(bad):
    with pytest.raises((ModelFormatError, ValueError)):
        KodairaType.parse(bad)


def test_ii_star_graph():
    g = build_fiber_graph(KodairaType.parse("II*"))
    assert len(g) == 9
    assert list(g.mults) == [1, 2, 3, 4, 5, 6, 4, 2, 3]
    assert fiber_multiplicities(g.gram()) == [1, 2, 3, 4, 5, 6, 4, 2, 3]


def test_i2_graph():
    g = build_fiber_graph(KodairaType.parse("I2"))
    assert len(g) == 2 and g.pairing(0, 1) == 2 and list(g.mults) == [1, 1]


def test_i0_star_is_a_star():
    g = build_fiber_graph(KodairaType.parse("I0*"))
    assert g.mults[0] == 2 and sorted(g.mults[1:]) == [1, 1, 1, 1]
    assert sorted(g.neighbours(0)) == [1, 2, 3, 4]


def test_triangle_and_e7_null_vectors():
    tri = [[-2, 1, 1], [1, -2, 1], [1, 1, -2]]
    assert fiber_multiplicities(tri) == [1, 1, 1]
    e7 = build_fiber_graph(KodairaType.parse("III*"))
    assert fiber_multiplicities(e7.gram()) == [1, 2, 3, 4, 3, 2, 1, 2]


def test_non_fiber_graphs_rejected():
    with pytest.raises(NotAFiberGraph):
        fiber_multiplicities([[-2, 1], [1, -2]])
    # two disjoint fibers: kernel of dimension 2
    with pytest.raises(NotAFiberGraph):
        fiber_multiplicities([[-2, 2, 0, 0], [2, -2, 0, 0], [0, 0, -2, 2], [0, 0, 2, -2]])


@pytest.mark.parametrize("tag", ALL_TAGS)
def test_graphs_against_sympy(tag):
    g = build_fiber_graph(KodairaType.parse(tag))
    assert oracles.sympy_null_vector(g.gram()) == list(g.mults)
    assert all(g.fiber_dot(i) == 0 for i in range(len(g)))
    assert len(g) == KodairaType.parse(tag).n_components
    assert g.simple_components() == [i for i, m in enumerate(g.mults) if m == 1]


@pytest.mark.parametrize("tag,e", [("II*", 10), ("I7", 7), ("I1", 1), ("I2*", 8), ("III", 3),
                                   ("IV", 4), ("IV*", 8), ("III*", 9), ("II", 2)])
def test_euler(tag, e):
    assert euler_number(KodairaType.parse(tag)) == e


@pytest.mark.parametrize("cfg,rank", [("II*, II", 0), ("III*, 3I1", 1), ("II, 10I1", 8),
                                      ("I2*, III, I1", 1), ("I7, II, 3I1", 2), ("IV, II, 6I1", 6)])
def test_mw_rank(cfg, rank):
    assert mw_rank(parse_config(cfg)) == rank


def test_negative_rank():
    with pytest.raises(NegativeRank):
        mw_rank(parse_config("II*, II*"))


def test_validate_config_examples():
    r = validate_config(parse_config(["II*", "II"]))
    assert (r.euler, r.rank, r.ok, r.extremal) == (12, 0, True, True)
    assert [str(t) for t in r.reducible] == ["II*"] and [str(t) for t in r.nonreduced] == ["II*"]

    r = validate_config(parse_config("I2*, III, I1"))
    assert (r.euler, r.rank) == (12, 1)
    assert [str(t) for t in r.reducible] == ["I2*", "III"] and [str(t) for t in r.nonreduced] == ["I2*"]

    r = validate_config(parse_config("II*, II*"))
    assert not r.ok and any("20" in f for f in r.failures)


def test_config_formatting():
    c = parse_config("(IV, II, 6I1)")
    assert len(c) == 8
    assert format_config(c) == "(IV, II, 6I1)"
    assert parse_config(["10I1", "II"]) == parse_config("10I1, II")


def test_dot_export():
    dot = build_fiber_graph(KodairaType.parse("I3")).to_dot()
    assert dot.startswith("graph") and dot.count("--") == 3
