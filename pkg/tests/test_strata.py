import json

from latrefl import strata


def test_eleven_nodes():
    scheme = strata.build_strata()
    assert len(scheme.nodes) == 11
    labels = [n.label for n in scheme.nodes]
    assert len(set(labels)) == 11
    for rt in ("2E8", "D16", "A17", "E7+D10", "3E6", "D7+A11"):
        assert f"II({rt})" in labels


def test_dimensions():
    scheme = strata.build_strata()
    dims = {n.label: n.dim for n in scheme.nodes}
    assert dims["I0"] == 0 and dims["III0"] == 0
    assert dims["I1"] == 1 and dims["III1"] == 1 and dims["III2"] == 2
    assert dims["II(3E6)"] == 1 and dims["II(D7+A11)"] == 1
    assert dims["II(A17)"] == 2 and dims["II(E7+D10)"] == 2
    assert dims["II(2E8)"] == 3 and dims["II(D16)"] == 3


def test_dim_formula():
    report = strata.dim_formula_check()
    assert len(report) == 6
    assert all(v["match"] for v in report.values())


def test_minimal_and_maximal():
    scheme = strata.build_strata()
    assert scheme.minimal_levels() == {"I0", "III0"}
    maximal = scheme.maximal_strata()
    assert len(maximal) == 8
    by_dim = sorted(n.dim for n in maximal)
    assert by_dim == [1, 1, 1, 2, 2, 2, 3, 3]
    assert strata.TEXT_COUNTS == {"curves": 3, "surfaces": 4, "threefolds": 2}


def test_edges():
    scheme = strata.build_strata()
    resolved = {(a, b) for a, b, o in scheme.edges if o == "as-printed"}
    assert resolved == {("I0", "I1"), ("III0", "III1"), ("III1", "III2")}
    unresolved = {(a, b) for a, b, o in scheme.edges if o == "unresolved"}
    assert len(unresolved) == 5


def test_meets_arrangement_flags():
    scheme = strata.build_strata()
    flags = {n.root_type: n.meets_arrangement
             for n in scheme.nodes if n.root_type}
    assert flags == {"2E8": True, "D16": True, "A17": True,
                     "E7+D10": True, "3E6": False, "D7+A11": False}


def test_emit_stable():
    scheme = strata.build_strata()
    a = strata.emit(scheme, "json")
    b = strata.emit(strata.build_strata(), "json")
    assert a == b
    data = json.loads(a)
    assert len(data["nodes"]) == 11
    assert data["minimal_levels"] == ["I0", "III0"]
    assert data["text_counts"] == {"curves": 3, "surfaces": 4, "threefolds": 2}
    dot = strata.emit(scheme, "dot")
    assert dot.startswith("digraph strata {")
    assert dot == strata.emit(strata.build_strata(), "dot")
    assert "style=dashed" in dot
