import copy
import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from modorder import lab
from modorder.algebra import zmodule
from modorder.catalog import (
    SCHEMA,
    build,
    builtin,
    builtin_catalog,
    canonical_json,
    catalog_names,
    descriptor,
    export_dot,
    load_instance,
    load_path,
    matrix_to_json,
    save_instance,
)
from modorder.errors import AxiomViolation, NotAPartialOrder, SchemaError, UnknownInstance
from modorder.orders import build_poset

REQUIRED = {"zmod12", "zmod4", "zmod6", "zmod2x4", "ex3.7-z2", "ex3.9-z8", "u2z6", "m2z5", "m2z7", "m2z2", "z6"}


def test_catalog_contains_required_instances():
    assert REQUIRED <= set(catalog_names())
    assert len(set(catalog_names())) == len(builtin_catalog())


@pytest.mark.parametrize(
    "name,size",
    [("zmod12", 12), ("ex3.7-z2", 32), ("m2z5", 625), ("u2z6", 216), ("ex3.9-z8", 1024), ("m2z7", 2401)],
)
def test_catalog_sizes(name, size):
    assert builtin(name).size == size


def test_zmod12_is_over_integers_mod_12():
    sc = builtin("zmod12").scalars
    assert sc.is_integers and sc.exponent == 12


def test_unknown_instance():
    with pytest.raises(UnknownInstance):
        descriptor("nope")


@pytest.mark.parametrize("name", ["zmod12", "zmod2x4", "ex3.7-z2", "m2z2", "z6", "zero"])
def test_rebuild_is_identical(name):
    a, b = build(descriptor(name)), builtin(name)
    assert a.elements == b.elements
    assert np.array_equal(a.add, b.add) and np.array_equal(a.action, b.action)


def test_quoted_names_resolve():
    for d in builtin_catalog():
        M = builtin(d.name)
        for key, name in d.quoted.items():
            if key in ("m1", "m2"):
                M.index(name)
        for a, b in d.pairs:
            M.index(a), M.index(b)


# --- JSON --------------------------------------------------------------------


def test_save_zmod12_uses_integer_kind():
    doc = save_instance(builtin("zmod12"))
    assert doc["scalars"] == {"kind": "integers", "exponent": 12}
    assert doc["format"] == 1


@pytest.mark.parametrize("name", ["zmod12", "zmod2x4", "ex3.7-z2", "m2z2", "z6", "zero"])
def test_round_trip_is_canonical_identity(name):
    doc = save_instance(builtin(name), name)
    again = save_instance(load_instance(json.loads(json.dumps(doc))), name)
    assert canonical_json(again) == canonical_json(doc)


def test_load_path_round_trip(tmp_path):
    p = tmp_path / "m.json"
    p.write_text(json.dumps(save_instance(builtin("ex3.7-z2"))))
    M = load_path(str(p))
    assert np.array_equal(M.action, builtin("ex3.7-z2").action)


def test_invalid_json_is_schema_error(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(SchemaError) as info:
        load_path(str(p))
    assert info.value.path == "$"


def test_missing_field_reports_path():
    doc = save_instance(builtin("zmod12"))
    del doc["action"]
    with pytest.raises(SchemaError) as info:
        load_instance(doc)
    assert info.value.path == "$"


def test_wrong_type_reports_nested_path():
    doc = save_instance(builtin("z6"))
    doc["scalars"]["zero"] = "zero"
    with pytest.raises(SchemaError) as info:
        load_instance(doc)
    assert info.value.path.startswith("$.scalars")


def test_non_abelian_addition_is_axiom_violation():
    doc = save_instance(zmodule([3]))
    doc["add"] = [[0, 1, 2], [1, 2, 0], [2, 1, 0]]
    with pytest.raises(AxiomViolation):
        load_instance(doc)


def test_schema_is_draft_2020_valid():
    import jsonschema

    jsonschema.Draft202012Validator.check_schema(SCHEMA)


@given(st.integers(min_value=0, max_value=5), st.integers(min_value=0, max_value=5), st.integers(min_value=0, max_value=5))
def test_corrupted_cell_never_loads_silently(i, j, delta):
    doc = save_instance(zmodule([6]))
    bad = copy.deepcopy(doc)
    bad["add"][i][j] = (bad["add"][i][j] + delta) % 6
    if delta == 0:
        assert canonical_json(save_instance(load_instance(bad))) == canonical_json(doc)
    else:
        with pytest.raises(AxiomViolation):
            load_instance(bad)


# --- DOT -------------------------------------------------------------------------


def test_chain_dot_has_two_nodes_one_edge():
    M = zmodule([2])
    P = build_poset(M, "mitsch", np.array([[1, 1], [0, 1]], dtype=bool))
    text = export_dot(P)
    assert text.count("label=") == 2 and text.count("->") == 1


def test_zmod12_dot_has_six_to_two_edge():
    ctx = lab.context("zmod12")
    text = export_dot(ctx.poset("mitsch"))
    six, two = ctx.M.index("6"), ctx.M.index("2")
    assert f"n{six} -> n{two};" in text
    assert text == export_dot(ctx.poset("mitsch"))


def test_star_of_maximal_elements():
    M = zmodule([3])
    bits = np.array([[1, 1, 1], [0, 1, 0], [0, 0, 1]], dtype=bool)
    text = export_dot(build_poset(M, "mitsch", bits))
    assert "n0 -> n1;" in text and "n0 -> n2;" in text
    assert text.count("doublecircle") == 2


def test_dot_rejects_preorder():
    with pytest.raises(NotAPartialOrder):
        export_dot(lab.context("zmod12").poset("space"))


def test_matrix_json_for_preorder_withholds_analytics():
    doc = matrix_to_json(lab.context("zmod12").poset("space"))
    assert doc["hasse"] is None and doc["axioms"]["antisymmetric"] is not None
