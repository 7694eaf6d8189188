import gzip
import math
import os
import random
import subprocess

import pytest

import wotnet


def test_hand_example_reputation():
    log = wotnet.EventLog([(1, 3, 1, 10), (2, 3, 1, 20), (4, 3, -10, 30)])
    m = wotnet.node_metrics(log)[3]
    assert (m.rho_plus, m.rho_minus, m.rho) == (2, 10, -8)
    assert m.k_in == 3
    assert wotnet.node_metrics(log, cutoff=20)[3].rho == 2


def test_ingest_text_and_file(tmp_path):
    text = "rater,ratee,score,time\n1,2,3,100\n2,1,-4,50\nbad line\n"
    log, report = wotnet.ingest_text(text)
    assert len(log) == 2
    assert report["rejected"] == 1 and report["header_skipped"]
    assert [e.time for e in log.events] == [50, 100]
    with pytest.raises(wotnet.IngestError):
        wotnet.ingest_text(text, strict=True)
    with pytest.raises(wotnet.IngestError):
        wotnet.ingest_text("")

    path = tmp_path / "ratings.csv.gz"
    with gzip.open(path, "wt") as fh:
        fh.write("1,2,3,100\n2,1,-4,50\n")
    from_file, _ = wotnet.ingest_file(str(path))
    assert [tuple(e) for e in from_file.events] == [tuple(e) for e in log.events]


def test_layers_and_gettrust():
    log = wotnet.EventLog([(1, 2, 3, 0), (2, 3, 5, 1), (1, 4, 2, 2), (4, 3, -7, 3)])
    plus, minus = wotnet.split_layers(log)
    assert len(plus) == 3 and len(minus) == 1
    assert minus.edges[0].weight == 7
    assert wotnet.gettrust(log, 1, 3) == 3 - 2
    with pytest.raises(ValueError):
        wotnet.gettrust(log, 1, 1)


def test_metric_axioms():
    assert wotnet.gini([1, 1, 1, 1]) == pytest.approx(0.0)
    assert wotnet.gini([0, 0, 0, 1]) == pytest.approx(0.75)
    assert wotnet.kendall_tau_b([1, 2, 3], [1, 2, 3]) == pytest.approx(1.0)
    assert wotnet.kendall_tau_b([1, 1, 1], [1, 2, 3]) is None
    assert wotnet.burstiness([5.0] * 10) == pytest.approx(-1.0)
    rng = random.Random(3)
    samples = [rng.expovariate(0.5) for _ in range(100_000)]
    assert abs(wotnet.burstiness(samples)) <= 0.02
    assert wotnet.extended_jaccard([1, 2, 3], [1, 2, 3]) == pytest.approx(1.0)
    assert wotnet.extended_jaccard([1, 2], [3, 4]) == 0.0
    with pytest.raises(ValueError):
        wotnet.gini([])


def test_synth_pipeline_is_deterministic():
    a = wotnet.synth_log(n_users=80, n_events=3000, seed=5, score_model="norm", target_model="preferential")
    b = wotnet.synth_log(n_users=80, n_events=3000, seed=5, score_model="norm", target_model="preferential")
    assert [tuple(e) for e in a.events] == [tuple(e) for e in b.events]
    plus, _ = wotnet.split_layers(a)
    c = wotnet.mean_clustering(plus)
    assert 0.0 <= c <= 1.0
    null = wotnet.configuration_null(plus, n_samples=4, seed=9)
    assert null["degrees_preserved"]
    assert null == wotnet.configuration_null(plus, n_samples=4, seed=9, threads=1)
    labels = wotnet.categorize(a)
    assert set(labels.values()) <= {"trustworthy", "controversial", "untrusted", "uncategorized"}
    for _, gp, gm in wotnet.gini_series(a):
        for g in (gp, gm):
            assert g is None or 0.0 <= g < 1.0
    hours = wotnet.circadian_profile(a, -6)
    assert math.isclose(sum(hours["rewarding"]), 1.0, abs_tol=1e-9)


def test_run_and_cli(tmp_path):
    code, out, _ = wotnet.run("synth", {"out": str(tmp_path), "seed": "4", "users": "30", "events": "400"})
    assert code == 0 and "400 events" in out
    code, out, _ = wotnet.run("summary", {"input": str(tmp_path / "synth.csv"), "out": str(tmp_path / "s")})
    assert code == 0 and "events=400" in out
    code, _, _ = wotnet.run("summary", {"input": str(tmp_path / "missing.csv"), "out": str(tmp_path / "m")})
    assert code == 2
    with pytest.raises(ValueError):
        wotnet.run("summary", {"colour": "red"})

    cli = os.environ.get("WOT_CLI")
    if cli:
        done = subprocess.run([cli, "summary", "--input", str(tmp_path / "synth.csv"), "--out", str(tmp_path / "c")],
                              capture_output=True, text=True)
        assert done.returncode == 0 and "users=" in done.stdout
        assert subprocess.run([cli, "summary", "--no-such-flag"], capture_output=True).returncode == 1
