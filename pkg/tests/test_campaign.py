import numpy as np
import pytest

from hyperinterlace.campaign import (
    THEOREMS,
    InstanceConfig,
    instances,
    random_edge_subsets,
    random_instance,
    run_campaign,
    run_theorem,
)
from hyperinterlace.hypergraph import validate


def test_instances_respect_config():
    config = InstanceConfig(max_vertices=6, max_edges=4, p_empty_edge=0.5)
    seen_empty = False
    for _, G in instances(3, 300, config):
        assert G.n <= 6 and G.m <= 4 and validate(G).ok and not G.isolated_vertices()
        seen_empty |= any(e.cardinality == 0 for e in G.edges)
    assert seen_empty


def test_instances_are_reproducible():
    assert list(instances(5, 20)) == list(instances(5, 20))
    assert random_instance(1) != random_instance(2)


def test_random_edge_subsets(hyperedge_loop):
    rng = np.random.default_rng(0)
    subsets = random_edge_subsets(hyperedge_loop, rng, 10)
    assert len(subsets) == 10
    assert all(F and set(F) <= set(hyperedge_loop.edge_ids) for F in subsets)


@pytest.mark.parametrize("theorem", [t for t in THEOREMS if t != "edge-K"])
def test_small_campaigns_pass(theorem):
    summary = run_campaign(theorem, 25, seed=9)
    assert summary.verdict and summary.errors == 0
    assert summary.as_dict()["verdict"] is True


def test_edge_K_campaign_records_failures():
    summary = run_campaign("edge-K", 10, seed=9)
    assert not summary.verdict and summary.failed > 0
    assert summary.companion_failures == 0
    assert summary.first_failure["document"]["vertices"]
    assert summary.failing_instances == sorted(summary.failing_instances)


def test_run_theorem_skips_isolating_loop(hyperedge_loop):
    reports, skipped = run_theorem(hyperedge_loop, "loop", np.random.default_rng(0))
    assert len(reports) == 1 and skipped == 0
    with pytest.raises(ValueError):
        run_theorem(hyperedge_loop, "nope", np.random.default_rng(0))
    with pytest.raises(ValueError):
        run_campaign("nope", 1)
