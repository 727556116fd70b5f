from fractions import Fraction

import pytest

import braesslab as bl


def test_graph_round_trip():
    g = bl.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.order == 4 and g.size == 3
    assert bl.Graph.from_edge_list(g.to_edge_list()) == g
    assert g.non_edges() == [(0, 2), (0, 3), (1, 3)]
    assert bl.make_family("cycle", 5).edges == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]


def test_exact_values():
    assert bl.kemeny_constant(bl.make_family("cycle", 6)) == Fraction(35, 6)
    assert bl.kemeny_constant(bl.make_family("path", 2)) == Fraction(1, 2)
    assert bl.tree_count(bl.make_family("complete", 12)) == 12**10
    assert bl.phi_v(bl.triangle_with_pendent(), 0) == 118
    assert bl.broom_dqd(6, 3) == 133
    assert bl.q_matrix(bl.make_family("path", 6), 2)[5] == [0, 0, 0, 1, 2, 3]


def test_routes_agree():
    for g in bl.oracle.connected_graph_catalogue(5):
        if g.order < 2:
            continue
        exact = bl.kemeny_constant(g)
        assert bl.kemeny_mfpt(g) == exact
        assert bl.oracle.kemeny_bruteforce(g) == exact
        assert bl.kemeny_spectral(g) == pytest.approx(float(exact))
        assert bl.oracle.enumerate_spanning_trees(g) == bl.tree_count(g)


def test_paradox_and_scan():
    star = bl.make_family("star", 6)
    ev = bl.is_paradoxical_at(star, 0, 1, 2, verify=True)
    assert ev["verdict"] is True
    assert ev["delta"] == Fraction(1, 6)
    scan = bl.braess_scan(star, threads=2)
    assert all(delta == Fraction(1, 4) and braess for _, _, delta, braess in scan)


def test_thresholds():
    report = bl.threshold_scan("cycle", 1, 2, n_min=3, n_max=20)
    assert report["first_n_true"] == 7
    assert report["boundary"] == [6]
    assert report["stated_threshold"] == 7
    found = bl.augment_until_paradoxical(bl.triangle_with_pendent(), 0, "path", 1, 2, 20)
    assert found is not None and found[0] == 5


def test_errors():
    with pytest.raises(bl.DisconnectedGraphError):
        bl.kemeny_constant(bl.Graph(3, [(0, 1)]))
    with pytest.raises(bl.EdgeListParseError):
        bl.Graph.from_edge_list("3\n0 0\n")
    with pytest.raises(bl.OracleBoundError):
        bl.oracle.enumerate_spanning_trees(bl.make_family("path", 12))
    with pytest.raises(ValueError):
        bl.phi_polys(1, 0)
