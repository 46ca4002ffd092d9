from functools import reduce

import pytest

from petrial.errors import ResourceLimitError
from petrial.harness import RunReport, run_scope, sweep_circle, sweep_grafts, sweep_lemma3, sweep_paths


def test_small_sweeps_pass():
    for report in run_scope("all", 4):
        assert report.passed, report.summary()
        assert report.instances > 0


def test_generated_counts_recorded():
    r = sweep_lemma3(4)
    assert r.generated == {"matchings_n0": 1, "matchings_n1": 1, "matchings_n2": 3, "matchings_n3": 15, "matchings_n4": 105}
    r = sweep_grafts(4, random_count=0)
    assert r.generated == {"graphs_n1": 1, "graphs_n2": 2, "graphs_n3": 8, "graphs_n4": 64}


@pytest.mark.parametrize("sweep", [sweep_paths, sweep_lemma3, sweep_circle, sweep_grafts])
def test_shards_merge_to_unsharded_counts(sweep):
    full = sweep(5)
    parts = [sweep(5, (i, 3)) for i in range(3)]
    merged = reduce(RunReport.merge, parts)
    assert merged.failures == full.failures == 0
    if sweep is sweep_circle:
        # deduplication is per shard, so shards may revisit a graph
        assert merged.instances >= full.instances
    else:
        assert merged.instances == full.instances
    assert merged.generated == full.generated


def test_report_records_first_failure():
    r = RunReport("demo")
    r.check(True, lambda: "never")
    r.check(False, lambda: "first")
    r.check(False, lambda: "second")
    assert r.failures == 2 and r.first_failure == "first" and not r.passed
    assert "FAIL demo" in r.summary()


def test_guard():
    with pytest.raises(ResourceLimitError):
        sweep_paths(30)
    with pytest.raises(ResourceLimitError):
        sweep_circle(6, limit=5)
