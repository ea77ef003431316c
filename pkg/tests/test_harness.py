import json
import os

import pytest

from crossdimer.families import build_A, build_TR
from crossdimer.harness import (
    BadProbePoint, CacheCorrupt, ConjectureExponents, CountCache,
    SuiteConfig, conjecture_probe, corner_kuo_quad, delannoy,
    reconstruct_weighted_count, render_svg, run_suite, screen_probe_point,
    seeded_kuo_quads, tr_three_way_split,
)
from crossdimer.matchcount import Graph, count_fkt, kuo_check


def test_delannoy_values():
    assert delannoy(1, 1) == 3
    assert delannoy(2, 2) == 13
    assert delannoy(1, 2) == delannoy(2, 1) == 5
    assert delannoy(0, 7) == 1


def test_cache_round_trip(tmp_path):
    path = str(tmp_path / "cache.jsonl")
    c = CountCache(path)
    assert c.get("k") is None
    c.put("k", 12345)
    assert c.get("k") == "12345"
    c2 = CountCache(path)
    assert c2.get("k") == "12345"
    with pytest.raises(CacheCorrupt):
        c2.put("k", 54321)


def test_probe_screen_rejects_unit_and_collisions():
    with pytest.raises(BadProbePoint):
        screen_probe_point((1, 1, 1))
    with pytest.raises(BadProbePoint):
        screen_probe_point((3, 2, 1))   # z collides with the unit
    with pytest.raises(BadProbePoint):
        screen_probe_point((5, 2, 3))   # even y makes a base share 2
    screen_probe_point((3, 5, 7))
    screen_probe_point((3, 5, 11))


def test_probe_consistent_and_reconstructs():
    vec = conjecture_probe("A", 1, 2, 2, 0, ((3, 5, 7), (5, 7, 3), (7, 3, 5)))
    assert isinstance(vec, ConjectureExponents)
    from crossdimer.families import assign_cross_weights, weight_point
    g = build_A(1, 2, 2, 0)
    held = (3, 5, 11)
    gw = assign_cross_weights(g, weight_point(*held))
    assert count_fkt(gw) == reconstruct_weighted_count("A", 2, 2, 0, vec, held)


def test_probe_rejects_bad_point():
    with pytest.raises(BadProbePoint):
        conjecture_probe("A", 1, 2, 2, 0, ((1, 1, 1),))


def test_probe_inconsistent_on_broken_weights(monkeypatch):
    import crossdimer.families as fams
    from crossdimer.harness import Inconsistent

    broken = dict(fams.WEIGHT_TABLE)
    broken[((0, 0), (0, 1))] = "x"  # weight an edge the pattern leaves at 1
    monkeypatch.setattr(fams, "WEIGHT_TABLE", broken)
    out = conjecture_probe("A", 1, 2, 2, 0, ((3, 5, 7), (5, 7, 3)))
    assert isinstance(out, Inconsistent)


def test_render_svg(tmp_path):
    out = str(tmp_path / "g.svg")
    g = build_TR(1, 2)
    render_svg(g, out)
    text = open(out).read()
    assert text.startswith("<?xml")
    assert text.count("<line") == g.n_edges()
    # empty graph renders valid svg
    render_svg(Graph([], []), out)
    assert "<svg" in open(out).read()


def test_render_svg_weight_labels(tmp_path):
    from crossdimer.families import assign_cross_weights, weight_point
    g = assign_cross_weights(build_A(1, 2, 2, 0), weight_point(3, 5, 7))
    out = str(tmp_path / "w.svg")
    render_svg(g, out, show_weights=True)
    assert open(out).read().count("<text") == len(g.weights)


def test_seeded_quads_valid():
    import random
    g = build_A(1, 3, 3, 0)
    quads = seeded_kuo_quads(g, random.Random(7), want=3)
    for q in quads:
        res = kuo_check(g, *q)
        assert res["equal"]


def test_corner_quad_found():
    g, quad = corner_kuo_quad(8, 8, 3)
    res = kuo_check(g, *quad, method="fkt")
    assert res["equal"] and res["rhs"] > 0


def test_tr_split_structure():
    from crossdimer.matchcount import reduce_forced

    g, east, mid, west = tr_three_way_split(1, 2)
    band = g.induced(mid)
    assert count_fkt(band) == 1
    reduced, mult = reduce_forced(band)
    assert len(reduced) == 0 and mult == 1
    assert count_fkt(g.induced(east)) * count_fkt(g.induced(west)) == 100


def test_suite_determinism():
    cfg = SuiteConfig(seed=99)
    r1 = run_suite("sanity", cfg)
    r2 = run_suite("sanity", cfg)
    assert r1.records == r2.records


def test_run_suite_unknown():
    with pytest.raises(ValueError):
        run_suite("nope")


def test_cache_env_override(tmp_path, monkeypatch):
    path = str(tmp_path / "env.jsonl")
    monkeypatch.setenv("CROSSDIMER_CACHE", path)
    c = CountCache()
    c.put("x", 7)
    assert os.path.exists(path)
    rec = json.loads(open(path).read().strip())
    assert rec["key"] == "x" and rec["count"] == "7"
