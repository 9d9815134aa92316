import itertools
import os
from fractions import Fraction
from pathlib import Path

import networkx as nx
import pytest

import erlab

CORPUS = Path(os.environ.get("ERLAB_TEST_CORPUS", Path(__file__).resolve().parents[1] / "corpus"))


def test_exponents_are_fractions():
    up = erlab.exponent_upper(5, 2)
    assert up["value"] == Fraction(1, 2)
    low = erlab.exponent_lower(5, 2)
    assert isinstance(low["value"], Fraction)
    assert low["value"] <= up["value"]
    assert erlab.uncolored_exponent(3, 4) == Fraction(1, 2)


def brute_alpha(g, s):
    nodes = list(g.nodes)
    for size in range(len(nodes), -1, -1):
        for sub in itertools.combinations(nodes, size):
            h = g.subgraph(sub)
            if not any(len(c) >= s for c in nx.find_cliques(h)):
                return size
    return 0


@pytest.mark.parametrize("seed", range(8))
def test_alpha_matches_brute_force(seed):
    g = nx.gnp_random_graph(11, 0.55, seed=seed)
    for s in (3, 4):
        got = erlab.alpha(11, g.edges, s)
        assert got["optimal"]
        assert got["size"] == brute_alpha(g, s)
        assert len(got["witness"]) == got["size"]


def test_count_free_subsets_on_k4():
    k4 = nx.complete_graph(4)
    # triangle-free subsets of K_4 have at most two vertices
    assert erlab.count_free_subsets(4, k4.edges, 3) == 1 + 4 + 6
    assert erlab.count_free_subsets(4, k4.edges, 5) == 16


def test_construct_writes_a_replayable_instance(tmp_path):
    cert = erlab.construct(5, 3, 2, 64, k=2, seed=3, out_dir=tmp_path)
    assert cert["certified"]
    assert all(c["pass"] for c in cert["checks"].values() if c["hard"])
    assert erlab._core.replay_instance(tmp_path, 3) is None


def test_bad_parameters_raise():
    with pytest.raises(erlab.ParameterError):
        erlab.run_experiment({"n": [32], "seeds": [1], "colour": 1})
    with pytest.raises(erlab.ParameterError):
        erlab.fit_exponent([(1, 1), (2, 2)])


def test_small_experiment_is_labelled():
    rep = erlab.run_experiment({"s": 5, "b": 3, "t": 2, "n": [32, 64, 96], "seeds": [1],
                                "write_instances": False, "out_dir": "unused"})
    assert rep["label"] == erlab.ASYMPTOTIC_LABEL
    assert [r["n"] for r in rep["rows"]] == [32, 64, 96]
    assert all(r["cert_ok"] for r in rep["rows"])


def test_fast_verify(tmp_path):
    results = erlab.verify("fast", CORPUS, tmp_path)
    assert [r["id"] for r in results] == [1, 2, 7, 11]
    assert all(r["passed"] for r in results), results
