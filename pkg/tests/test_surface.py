import pytest

from resconic import lattice as L
from resconic.errors import InconsistentProximity, ModelFormatError, NegativeEdge
from resconic.kodaira import parse_config
from resconic.modelfile import dump_model, load_model, parse_model
from resconic.surface import (
    FIBER_COMPONENT,
    SECTION,
    BasePointForest,
    CurveSpec,
    NamedCurve,
    build_model,
    exceptional_component_class,
    intersection_graph,
    negative_curve_inventory,
    strict_transform_class,
    validate_model,
)

e = L.exceptional


def test_exceptional_components_on_a_chain():
    chain = BasePointForest.chain()
    assert exceptional_component_class(chain, 9) == e(9)
    c2 = exceptional_component_class(chain, 2)
    assert c2 == e(2) - e(3) and L.self_intersection(c2) == -2
    assert exceptional_component_class(BasePointForest.plane(), 1) == e(1)


def test_strict_transforms():
    plane, chain = BasePointForest.plane(), BasePointForest.chain()
    line = strict_transform_class(CurveSpec("L", "line", through=((1, 1), (2, 1))), plane)
    assert line == L.DivisorClass.of(1, [1, 1]) and L.self_intersection(line) == -1
    tangent = strict_transform_class(CurveSpec("L", "line", through=((1, 1), (2, 1), (3, 1))), chain)
    assert tangent == L.DivisorClass.of(1, [1, 1, 1]) and L.self_intersection(tangent) == -2
    conic = strict_transform_class(CurveSpec("Q", "conic", through=tuple((i, 1) for i in range(1, 5))), plane)
    assert conic == L.DivisorClass.of(2, [1, 1, 1, 1])
    assert L.self_intersection(conic) == 0 and L.arithmetic_genus(conic) == 0


@pytest.mark.parametrize("through", [
    ((1, 1), (1, 1)),       # point twice
    ((10, 1),),             # no such point
    ((1, 2),),              # a line is smooth
    ((2, 1),),              # infinitely near point without its parent
])
def test_proximity_violations(through):
    with pytest.raises(InconsistentProximity):
        strict_transform_class(CurveSpec("X", "line", through=through), BasePointForest.chain())


def test_forest_shape_checked():
    with pytest.raises(ModelFormatError):
        BasePointForest((None,) * 8)
    with pytest.raises(ModelFormatError):
        BasePointForest((None, 3) + (None,) * 7)


def test_inventories(models):
    inv5 = negative_curve_inventory(models["only_type_5"])
    assert len(inv5) == 10
    assert [c.label for c in inv5 if c.role == SECTION] == ["E9"]
    assert sum(c.role == FIBER_COMPONENT for c in inv5) == 9

    inv2 = negative_curve_inventory(models["only_type_2"])
    assert len(inv2) == 17 and all(c.role == SECTION for c in inv2)

    empty = build_model("empty", BasePointForest.plane(), [], parse_config("II, 10I1"))
    assert negative_curve_inventory(empty) == []


def test_intersection_graph_edges():
    c = lambda lab, cls: NamedCurve(lab, cls, "x")  # noqa: E731
    g = intersection_graph([c("E9", e(9)), c("E8", e(8) - e(9))])
    assert g["E9"]["E8"]["weight"] == 1
    g = intersection_graph([c("L", L.DivisorClass.of(1, [1, 1])), c("E2", e(2))])
    assert g["L"]["E2"]["weight"] == 1
    assert intersection_graph([c("E1", e(1)), c("E2", e(2))]).number_of_edges() == 0
    with pytest.raises(NegativeEdge):
        intersection_graph([c("A", e(1)), c("B", e(1) - e(2))])


def test_all_fixtures_valid(models):
    for name, m in models.items():
        r = validate_model(m)
        assert r.ok, (name, r.failures)
        assert r.warnings == [], (name, r.warnings)


def test_declared_section_with_wrong_class():
    m = load_model("builtin:only_type_5")
    d = dump_model(m)
    d["curves"].append({"label": "S", "kind": "class", "class": list((e(2) - e(3)).coeffs), "role": "section"})
    r = validate_model(parse_model(d))
    assert not r.ok and any("S" in f for f in r.failures)


def test_fiber_graph_mismatch_detected():
    # the I2* members sum to -K but do not form the graph of IV*, which has as many components
    d = dump_model(load_model("builtin:i2s_iii_i1"))
    d["config"] = ["IV*", "III", "I1"]
    d["fibers"]["IV*"] = d["fibers"].pop("I2*")
    r = validate_model(parse_model(d))
    assert r.failures == ["fiber 'IV*': intersection graph does not match IV*"]


def test_fiber_members_must_sum_to_fiber_class():
    d = dump_model(load_model("builtin:only_type_5"))
    d["fibers"]["II*"] = [x for x in d["fibers"]["II*"] if x[0] != "L"]
    r = validate_model(parse_model(d))
    assert not r.ok


def test_undeclared_fiber_is_a_warning():
    d = dump_model(load_model("builtin:only_type_5"))
    del d["fibers"]
    r = validate_model(parse_model(d))
    assert r.ok and r.warnings


def test_model_round_trip(models):
    for m in models.values():
        again = parse_model(dump_model(m))
        assert again.curves == m.curves and again.config == m.config and again.fibers == m.fibers


def test_schema_rejects_unknown_fields():
    d = dump_model(load_model("builtin:only_type_5"))
    d["colour"] = "pink"
    with pytest.raises(ModelFormatError):
        parse_model(d)
    with pytest.raises(ModelFormatError):
        load_model("builtin:nope")
