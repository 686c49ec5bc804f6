import random

import pytest

from covertnet import (
    LabeledGraph,
    PreconditionError,
    Role,
    SamplingConfig,
    snowball,
    snowball_run,
)

from util import complete_graph, gnp_graph, path_graph


def config(**kw):
    base = dict(seed_count=1, names_per_interview=3, waves=2, rng_seed=0)
    base.update(kw)
    return SamplingConfig(**base)


def test_config_validation():
    with pytest.raises(PreconditionError):
        config(seed_count=0)
    with pytest.raises(PreconditionError):
        config(names_per_interview=-1)
    with pytest.raises(PreconditionError):
        config(waves=-1)


def test_seed_count_cannot_exceed_population():
    with pytest.raises(PreconditionError):
        snowball(path_graph(3), config(seed_count=4))


def test_complete_graph_is_fully_recovered():
    for n in (2, 3, 5, 8):
        g = complete_graph(n)
        got = snowball(g, config(names_per_interview=n - 1, waves=1, rng_seed=n))
        assert got == g


def test_sample_is_a_subgraph_of_the_truth():
    rng = random.Random(14)
    for trial in range(80):
        g = gnp_graph(rng, rng.randrange(2, 20), 0.3)
        cfg = config(
            seed_count=rng.randrange(1, g.node_count + 1),
            names_per_interview=rng.randrange(0, 5),
            waves=rng.randrange(0, 4),
            rng_seed=trial,
            mutual_confirmation=rng.random() < 0.5,
        )
        got = snowball(g, cfg)
        assert set(got.nodes) <= set(g.nodes)
        assert set(got.edges()) <= set(g.edges())


def test_same_seed_same_sample():
    g = gnp_graph(random.Random(9), 15, 0.4)
    cfg = config(seed_count=2, waves=2, rng_seed=123)
    assert snowball(g, cfg) == snowball(g, cfg)


def test_different_seeds_usually_differ():
    g = gnp_graph(random.Random(9), 15, 0.4)
    runs = {snowball(g, config(seed_count=1, waves=1, rng_seed=s)) for s in range(8)}
    assert len(runs) > 1


def test_zero_names_yields_isolated_seeds():
    g = complete_graph(6)
    got = snowball(g, config(seed_count=3, names_per_interview=0, waves=2, rng_seed=4))
    assert got.node_count == 3
    assert got.edge_count == 0


def test_final_wave_mentions_do_not_join():
    # one seed on a long path, one wave: the final wave's interviewees
    # mention their own neighbors, but those people are never
    # interviewed and must not appear in the sample
    g = path_graph(9)
    cfg = config(seed_count=1, names_per_interview=2, waves=1, rng_seed=5)
    run = snowball_run(g, cfg)
    rng = random.Random(cfg.rng_seed)
    (seed,) = rng.sample(sorted(g.nodes), 1)
    reach = {v for v in g.nodes if abs(int(v[1:]) - int(seed[1:])) <= 1}
    assert set(run.graph.nodes) == reach
    assert run.waves[-1].new_nodes == 0


def test_mutual_confirmation_only_narrows_the_edge_set():
    rng = random.Random(77)
    for trial in range(40):
        g = gnp_graph(rng, rng.randrange(3, 16), 0.4)
        strict = SamplingConfig(
            seed_count=min(2, g.node_count),
            names_per_interview=2,
            waves=2,
            rng_seed=trial,
            mutual_confirmation=True,
        )
        loose = SamplingConfig(
            seed_count=min(2, g.node_count),
            names_per_interview=2,
            waves=2,
            rng_seed=trial,
            mutual_confirmation=False,
        )
        a = snowball(g, strict)
        b = snowball(g, loose)
        # the RNG draw sequence is identical, confirmation only filters
        assert set(a.nodes) == set(b.nodes)
        assert set(a.edges()) <= set(b.edges())


def test_roles_survive_sampling():
    g = complete_graph(3).with_roles({"v0": Role.EXPLOITER, "v1": Role.GUIDE})
    got = snowball(g, config(seed_count=3, names_per_interview=2, waves=1, rng_seed=1))
    assert got.role("v0") is Role.EXPLOITER
    assert got.role("v1") is Role.GUIDE
    assert got.role("v2") is None


def test_wave_stats_account_for_everything():
    rng = random.Random(6)
    for trial in range(30):
        g = gnp_graph(rng, rng.randrange(4, 18), 0.35)
        cfg = config(
            seed_count=min(2, g.node_count),
            names_per_interview=3,
            waves=3,
            rng_seed=trial,
        )
        run = snowball_run(g, cfg)
        assert run.waves[0].interviews == cfg.seed_count
        assert cfg.seed_count + sum(w.new_nodes for w in run.waves) == run.graph.node_count
        assert sum(w.edges_observed for w in run.waves) == run.graph.edge_count
        for w in run.waves:
            assert w.interviews >= 0 and w.new_nodes >= 0 and w.edges_observed >= 0


def test_run_and_plain_snowball_agree():
    g = gnp_graph(random.Random(30), 12, 0.4)
    cfg = config(seed_count=2, waves=2, rng_seed=9)
    assert snowball_run(g, cfg).graph == snowball(g, cfg)
