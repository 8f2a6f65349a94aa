"""Command-line interface: outputs, manifests, and exit codes."""

import hashlib
import json

import numpy as np
import pytest

from qaflow import (TrotterSchedule, compute_flow, intersection_index,
                    qaa_evolve, sample_measurements)
from qaflow.cli import main

from conftest import make_graph

LISTING_DOC = ('{"vertices": 5, "edges": '
               '[[0, 1], [1, 2], [1, 3], [1, 4], [2, 3], [3, 4]]}')


@pytest.fixture
def graph_file(tmp_path):
    path = tmp_path / "graph.json"
    path.write_text(LISTING_DOC)
    return str(path)


class TestBrute:
    def test_stdout_document(self, graph_file, capsys):
        assert main(["brute", graph_file]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc == {"max_cut": 5, "degeneracy": 2,
                       "solutions": ["01010", "10101"]}

    def test_out_file_and_manifest(self, graph_file, tmp_path, capsys):
        out = tmp_path / "result.json"
        assert main(["brute", graph_file, "--out", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert doc["max_cut"] == 5
        manifest = json.loads((tmp_path / "result.json.manifest.json")
                              .read_text())
        assert manifest["command"] == "brute"
        assert manifest["version"]
        assert manifest["duration_s"] >= 0
        want_digest = hashlib.sha256(LISTING_DOC.encode()).hexdigest()
        assert manifest["graph_sha256"] == want_digest


class TestExitCodes:
    def test_missing_file(self, tmp_path, capsys):
        code = main(["brute", str(tmp_path / "absent.json")])
        assert code == 2
        assert "error:" in capsys.readouterr().err

    def test_bad_json(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text('{"vertices": 3, "edges": [[0, 0]]}')
        assert main(["brute", str(path)]) == 2

    def test_budget_exceeded(self, tmp_path, capsys):
        path = tmp_path / "big.json"
        path.write_text(json.dumps({"vertices": 25, "edges": []}))
        assert main(["brute", str(path)]) == 3

    def test_numerical_failure(self, tmp_path, capsys):
        # no edges: the crossing-count reference line cannot be placed
        path = tmp_path / "empty.json"
        path.write_text(json.dumps({"vertices": 3, "edges": []}))
        assert main(["index", str(path)]) == 4

    def test_bad_noise_spec_is_usage_error(self, graph_file):
        with pytest.raises(SystemExit) as exc:
            main(["qaa", graph_file, "--noise", "bogus"])
        assert exc.value.code == 2


class TestQaa:
    def test_counts_total_and_match_library(self, graph_file, capsys):
        assert main(["qaa", graph_file, "--steps", "50", "--shots", "800",
                     "--seed", "6"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["shots"] == 800
        assert sum(doc["counts"].values()) == 800
        g = make_graph("a")
        want = sample_measurements(
            qaa_evolve(g, TrotterSchedule(0.1, 50)), 800, seed=6)
        assert doc["counts"] == want.counts

    def test_top_truncation(self, graph_file, capsys):
        assert main(["qaa", graph_file, "--steps", "10", "--shots", "400",
                     "--top", "3"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert len(doc["top"]) == 3
        counts = [c for _, c in doc["top"]]
        assert counts == sorted(counts, reverse=True)
        # full histogram still present alongside the summary
        assert sum(doc["counts"].values()) == 400

    def test_noisy_run_deterministic(self, graph_file, capsys):
        argv = ["qaa", graph_file, "--steps", "10", "--shots", "500",
                "--noise", "heron-r2-med", "--seed", "8"]
        assert main(argv) == 0
        first = json.loads(capsys.readouterr().out)
        assert main(argv) == 0
        second = json.loads(capsys.readouterr().out)
        assert first == second

    def test_manifest_parameters(self, graph_file, tmp_path, capsys):
        out = tmp_path / "h.json"
        assert main(["qaa", graph_file, "--steps", "20", "--shots", "100",
                     "--noise", "heron-r3-opt", "--out", str(out)]) == 0
        manifest = json.loads((tmp_path / "h.json.manifest.json")
                              .read_text())
        assert manifest["command"] == "qaa"
        assert manifest["seed"] == 0
        params = manifest["parameters"]
        assert params["steps"] == 20
        assert params["shots"] == 100
        assert params["dt"] == 0.1
        assert params["noise"] == "heron-r3-opt"
        # human summary goes to stdout when the JSON went to a file
        assert "top outcomes" in capsys.readouterr().out


class TestFlow:
    def test_csv_shape(self, graph_file, capsys):
        assert main(["flow", graph_file, "--samples", "4", "--steps",
                     "10"]) == 0
        captured = capsys.readouterr()
        rows = captured.out.strip().splitlines()
        assert rows[0] == "s,k,phase,re_scaled,im_scaled"
        assert len(rows) == 1 + 4 * 32
        s, k, phase, re, im = rows[1].split(",")
        assert float(s) == 0.0 and int(k) == 0
        point = complex(float(re), float(im))
        assert abs(point) == pytest.approx(0.0, abs=1e-12)
        # default evolution time trips the phase-wrap warning
        assert "phases may alias" in captured.err

    def test_matches_library(self, graph_file, capsys):
        assert main(["flow", graph_file, "--samples", "3", "--steps", "10",
                     "--scale", "7"]) == 0
        rows = capsys.readouterr().out.strip().splitlines()[1:]
        fl = compute_flow(make_graph("a"), 3, TrotterSchedule(0.1, 10),
                          scale=7.0)
        got = np.array([float(r.split(",")[2]) for r in rows])
        want = np.concatenate([s.phases for s in fl.samples])
        assert np.allclose(got, want, atol=1e-15)

    def test_out_writes_branches_and_manifest(self, graph_file, tmp_path,
                                              capsys):
        out = tmp_path / "flow.csv"
        assert main(["flow", graph_file, "--samples", "4", "--steps", "10",
                     "--out", str(out)]) == 0
        assert out.exists()
        branches = (tmp_path / "flow.branches.csv").read_text().splitlines()
        assert branches[0] == "branch_id,s,phase"
        assert len(branches) == 1 + 32 * 4
        assert (tmp_path / "flow.csv.manifest.json").exists()


class TestIndex:
    def test_matches_library(self, graph_file, capsys):
        assert main(["index", graph_file]) == 0
        doc = json.loads(capsys.readouterr().out)
        report = intersection_index(make_graph("a"))
        assert doc == {
            "index": report.index,
            "crossings_down": report.crossings_down,
            "crossings_up": report.crossings_up,
            "rank_start": report.rank_start,
            "rank_end": report.rank_end,
        }


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert "qaflow" in capsys.readouterr().out
