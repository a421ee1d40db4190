import math

import pytest

import clan


def test_tokenize_keeps_hashtags():
    assert clan.tokenize("I support #OpenData") == ["i", "support", "#opendata"]


def test_karate_louvain_modularity():
    g = clan.fixtures.karate_club()
    assert (g.node_count, g.edge_count) == (34, 78)
    assignment = clan.louvain(g)
    assert clan.modularity(g, assignment) >= 0.40
    assert clan.louvain(g) == assignment


def test_two_triangles_optimum():
    g = clan.fixtures.two_triangles()
    assert clan.modularity(g, clan.louvain(g)) == pytest.approx(0.5, abs=1e-12)


def test_edgeless_graph_is_an_error():
    with pytest.raises(clan.ClanError):
        clan.modularity(clan.Graph([], nodes=["a", "b"]), [0, 1])


def test_run_clan_assigns_every_node():
    g, attrs, labels = clan.generate_sbm([120, 120], 0.025, 0.002, 8, 30, 0.2, 0.0, 1)
    result = clan.run_clan(g, attrs)
    significant = set(result["significant"])
    assert len(result["final"]) == g.node_count
    assert all(c in significant for c in result["final"])
    assert clan.unlabeled_fraction(g.node_count, result["final"]) == 0.0
    scores = clan.averaged_scores(result["final"], labels)
    assert 0.0 <= scores["avg_jaccard"] <= scores["avg_f1"] <= 1.0


def test_generate_sbm_is_seeded():
    a = clan.generate_sbm([4, 4], 1.0, 0.0, seed=3)
    b = clan.generate_sbm([4, 4], 1.0, 0.0, seed=3)
    assert a[0].edges() == b[0].edges()
    assert a[0].edge_count == 12
    assert a[2] == ["block0"] * 4 + ["block1"] * 4


def test_pairwise_metrics():
    assert clan.pairwise_f1([1, 2, 3], [2, 3, 4, 5]) == pytest.approx(4 / 7)
    assert clan.pairwise_jaccard([1, 2, 3], [2, 3, 4, 5]) == pytest.approx(0.4)


def test_subsample_flattens_and_keeps_identity():
    g, _, labels = clan.generate_sbm([200, 200], 0.04, 0.004, 8, 30, 0.2, 1.0, 0)
    curve = clan.degree_ratio_curve(g, labels, "block0", "block1")
    assert curve["fitted_slope"] > 0.05
    flat = clan.subsample_to_slope(g, labels, "block0", "block1", 0.0)
    assert abs(flat["achieved_slope"]) <= 0.05
    assert flat["graph"].node_count == len(flat["kept"])
    same = clan.subsample_to_slope(g, labels, "block0", "block1", curve["fitted_slope"])
    assert same["removed_nodes"] == 0
    assert not math.isnan(same["achieved_slope"])
