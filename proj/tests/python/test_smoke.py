import pytest

import frustgraph

PAIR = """d=3 n=1
g1: X
g2: Z
"""


def test_rank_and_nullspace():
    rows = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
    assert frustgraph.rank(rows, 2) == 2
    assert frustgraph.nullspace(rows, 2) == [[1, 1, 1]]


def test_canonical_form_pairs_the_symplectic_part():
    form = frustgraph.canonical_form([[0, 1, 0], [-1, 0, 0], [0, 0, 0]], 5)
    assert form["blocks"] == 1
    assert form["residual_dim"] == 1
    assert len(form["transform"]) == 3


def test_generating_graph_of_clock_and_shift():
    gamma = frustgraph.generating_graph(PAIR)
    assert gamma[0][0] == 0 and gamma[1][1] == 0
    assert (gamma[0][1] + gamma[1][0]) % 3 == 0
    assert gamma[0][1] != 0


def test_geometric_measures():
    assert frustgraph.gm_measure("ghz", 3, [1]) == (2, 3)
    assert frustgraph.ggm_measure("ghz", 2) == (1, 2)
    assert frustgraph.gm_measure("five_qudit", 2, [1, 2]) == (3, 4)


def test_numeric_checks():
    assert frustgraph.verify_swap_identity(3) < 1e-12
    assert frustgraph.lagrange_extremum(5) == pytest.approx((1 + 5**-0.5) / 2, abs=1e-6)


def test_analyze_report():
    report = frustgraph.run("analyze", PAIR)
    assert report["command"] == "analyze"
    result = report["result"]
    assert result["rank"] == 2
    assert result["clique_number"] == 3
    assert result["sos_bound"] == 3


def test_entanglement_report_from_builtin():
    report = frustgraph.run("entanglement", builtin="ghz", d=2)
    assert report["result"]["is_gme"] is True
    assert report["result"]["ggm"]["num"] == 1


def test_errors_carry_codes():
    with pytest.raises(frustgraph.FrustgraphError) as info:
        frustgraph.rank([[1, 0]], 4)
    assert info.value.code == "NotPrime"
    with pytest.raises(frustgraph.FrustgraphError) as info:
        frustgraph.run("analyze", "d=2 n=1\ng1: X^2\n")
    assert info.value.code == "ExponentOutOfRange"
