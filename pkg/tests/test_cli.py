"""Command-line interface: subcommands, files, exit codes, manifests."""

import csv
import json
import os

import numpy as np
import numpy.testing as npt
import pytest
from click.testing import CliRunner

import arenewalk as aw
from arenewalk.cli import main
from arenewalk.errors import ComputationError


@pytest.fixture
def runner():
    return CliRunner()


def read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.reader(fh))


def read_bytes(path):
    with open(path, "rb") as fh:
        return fh.read()


# ---------------------------------------------------------------- list

def test_list_names_catalog(runner):
    res = runner.invoke(main, ["list"])
    assert res.exit_code == 0
    for name in aw.CATALOG:
        assert name in res.output
    assert "14" in res.output  # anthracene/phenanthrene node count


# ---------------------------------------------------------------- simulate

def test_simulate_writes_expected_files(runner, tmp_path):
    out = str(tmp_path / "run")
    res = runner.invoke(
        main,
        ["simulate", "-m", "benzene", "--t-max", "1", "--dt", "0.5", "--out", out],
    )
    assert res.exit_code == 0, res.output
    rows = read_csv(os.path.join(out, "site_series.csv"))
    assert rows[0] == ["molecule", "node", "t", "maxp", "trp"]
    # 6 nodes x 3 samples
    assert len(rows) == 1 + 18
    assert rows[1][:3] == ["benzene", "1", "0"]
    assert float(rows[1][3]) == 1.0
    assert float(rows[1][4]) == 0.0

    report = read_csv(os.path.join(out, "site_report.csv"))
    assert report[0] == ["molecule", "node", "class", "maxp_mean", "trp_mean"]
    assert len(report) == 1 + 6
    assert {r[2] for r in report[1:]} == {"C1"}

    manifest = json.load(open(os.path.join(out, "manifest.json")))
    assert manifest["command"] == "simulate"
    assert manifest["config"] == {
        "molecule": "benzene", "t_max": 1.0, "dt": 0.5, "gamma_scale": 1.0,
    }
    assert sorted(manifest["outputs"]) == ["site_report.csv", "site_series.csv"]
    assert manifest["package"]["name"] == "arenewalk"
    assert set(manifest["libraries"]) == {"python", "numpy", "scipy"}


def test_simulate_values_match_library(runner, tmp_path):
    out = str(tmp_path / "run")
    res = runner.invoke(
        main,
        ["simulate", "-m", "naphthalene", "--t-max", "2", "--dt", "1", "--out", out],
    )
    assert res.exit_code == 0, res.output
    g = aw.load_molecule("naphthalene")
    s = aw.time_series(aw.propagator(aw.hamiltonian(g)), t_max=2.0, dt=1.0)
    rows = read_csv(os.path.join(out, "site_series.csv"))[1:]
    for row in rows:
        node, t = int(row[1]), float(row[2])
        i = int(round(t / 1.0))
        npt.assert_allclose(float(row[3]), aw.maxp(s, node)[i], atol=1e-10)
        npt.assert_allclose(float(row[4]), aw.trp(s, node)[i], atol=1e-10)


def test_simulate_deterministic_and_replayable(runner, tmp_path):
    out1, out2, out3 = (str(tmp_path / d) for d in ("a", "b", "c"))
    args = ["simulate", "-m", "benzene", "--t-max", "2", "--dt", "0.25"]
    assert runner.invoke(main, args + ["--out", out1]).exit_code == 0
    assert runner.invoke(main, args + ["--out", out2]).exit_code == 0
    for fname in ("site_series.csv", "site_report.csv"):
        assert read_bytes(os.path.join(out1, fname)) == read_bytes(
            os.path.join(out2, fname)
        )
    # replay from the recorded manifest reproduces the exact bytes
    res = runner.invoke(
        main,
        ["simulate", "--from-manifest", os.path.join(out1, "manifest.json"),
         "--out", out3],
    )
    assert res.exit_code == 0, res.output
    for fname in ("site_series.csv", "site_report.csv"):
        assert read_bytes(os.path.join(out1, fname)) == read_bytes(
            os.path.join(out3, fname)
        )


def test_simulate_requires_molecule(runner, tmp_path):
    res = runner.invoke(main, ["simulate", "--out", str(tmp_path / "x")])
    assert res.exit_code == 2


def test_simulate_rejects_unknown_molecule(runner, tmp_path):
    res = runner.invoke(
        main, ["simulate", "-m", "coronene", "--out", str(tmp_path / "x")]
    )
    assert res.exit_code == 2
    assert "configuration error" in res.output


def test_simulate_rejects_bad_grid(runner, tmp_path):
    res = runner.invoke(
        main,
        ["simulate", "-m", "benzene", "--t-max", "-5", "--out", str(tmp_path / "x")],
    )
    assert res.exit_code == 2


def test_out_env_var(runner, tmp_path):
    out = str(tmp_path / "envrun")
    res = runner.invoke(
        main,
        ["simulate", "-m", "benzene", "--t-max", "1", "--dt", "0.5"],
        env={"ARENEWALK_OUT": out},
    )
    assert res.exit_code == 0, res.output
    assert os.path.exists(os.path.join(out, "site_series.csv"))


# ---------------------------------------------------------------- rank

def test_rank_benzene_single_class(runner, tmp_path):
    out = str(tmp_path / "rank")
    res = runner.invoke(main, ["rank", "-m", "benzene", "--out", out])
    assert res.exit_code == 0, res.output
    rows = read_csv(os.path.join(out, "ranks.csv"))
    assert rows[0] == ["node", "label", "score", "rank"]
    assert len(rows) == 7
    assert {r[3] for r in rows[1:]} == {"1"}


def test_rank_start_within_class_identical_output(runner, tmp_path):
    out1, out5 = str(tmp_path / "s1"), str(tmp_path / "s5")
    assert runner.invoke(
        main, ["rank", "-m", "benzene", "--start", "1", "--out", out1]
    ).exit_code == 0
    assert runner.invoke(
        main, ["rank", "-m", "benzene", "--start", "5", "--out", out5]
    ).exit_code == 0
    assert read_bytes(os.path.join(out1, "ranks.csv")) == read_bytes(
        os.path.join(out5, "ranks.csv")
    )


def test_rank_matches_library(runner, tmp_path):
    out = str(tmp_path / "rank")
    res = runner.invoke(
        main, ["rank", "-m", "naphthalene", "--steps", "500", "--out", out]
    )
    assert res.exit_code == 0, res.output
    lib = aw.rank_nodes(aw.load_molecule("naphthalene"), steps=500)
    rows = read_csv(os.path.join(out, "ranks.csv"))[1:]
    assert tuple(int(r[3]) for r in rows) == lib.ranks
    for row, score in zip(rows, lib.scores):
        npt.assert_allclose(float(row[2]), score, rtol=1e-11)
    manifest = json.load(open(os.path.join(out, "manifest.json")))
    assert manifest["config"]["steps"] == 500
    assert manifest["config"]["start"] == 1


def test_rank_manifest_records_resolved_steps(runner, tmp_path):
    out = str(tmp_path / "rank")
    res = runner.invoke(main, ["rank", "-m", "benzene", "--out", out])
    assert res.exit_code == 0
    manifest = json.load(open(os.path.join(out, "manifest.json")))
    assert manifest["config"]["steps"] == 10 * 6 * 6


def test_rank_weighted_coin_flag(runner, tmp_path):
    out = str(tmp_path / "rank")
    res = runner.invoke(
        main,
        ["rank", "-m", "phenanthrene", "--coin-degree", "weighted", "--out", out],
    )
    assert res.exit_code == 0, res.output
    rows = read_csv(os.path.join(out, "ranks.csv"))[1:]
    top = {int(r[0]) for r in rows if r[3] == "1"}
    assert top == {11, 12}


# ---------------------------------------------------------------- stability

def test_stability_orders_molecules(runner, tmp_path):
    out = str(tmp_path / "stab")
    res = runner.invoke(
        main,
        ["stability", "-m", "benzene", "-m", "anthracene",
         "--t-max", "5", "--dt", "0.1", "--out", out],
    )
    assert res.exit_code == 0, res.output
    assert "benzene > anthracene" in res.output
    rows = read_csv(os.path.join(out, "stability.csv"))
    assert rows[0] == ["molecule", "mean_trp", "rank"]
    assert rows[1][0] == "benzene" and rows[1][2] == "1"
    assert rows[2][0] == "anthracene" and rows[2][2] == "2"


def test_stability_needs_two_molecules(runner, tmp_path):
    res = runner.invoke(
        main,
        ["stability", "-m", "benzene", "--t-max", "5", "--dt", "0.1",
         "--out", str(tmp_path / "x")],
    )
    assert res.exit_code == 2


# ---------------------------------------------------------------- bond-order

def test_bond_order_prints_six_decimals(runner):
    res = runner.invoke(main, ["bond-order", "0"])
    assert res.exit_code == 0
    assert res.output.strip() == "0.000000"
    res = runner.invoke(main, ["bond-order", "4.0313"])
    assert res.exit_code == 0
    assert abs(float(res.output) - 1.0) < 1e-3


def test_bond_order_rejects_negative(runner):
    res = runner.invoke(main, ["bond-order", "--", "-2.0"])
    assert res.exit_code == 2
    assert "configuration error" in res.output


# ---------------------------------------------------------------- export-graph

def test_export_graph_round_trip(runner, tmp_path):
    out = str(tmp_path / "graph")
    res = runner.invoke(main, ["export-graph", "-m", "naphthalene", "--out", out])
    assert res.exit_code == 0, res.output
    g = aw.load_molecule("naphthalene")
    rows = read_csv(os.path.join(out, "adjacency.csv"))
    assert rows[0] == ["label"] + list(g.labels)
    A = np.array([[float(x) for x in row[1:]] for row in rows[1:]])
    npt.assert_allclose(A, aw.adjacency(g), atol=1e-12)
    rows = read_csv(os.path.join(out, "laplacian.csv"))
    L = np.array([[float(x) for x in row[1:]] for row in rows[1:]])
    npt.assert_allclose(L, aw.laplacian(g), atol=1e-12)


# ---------------------------------------------------------------- exit codes

def test_computation_error_maps_to_exit_3(runner, tmp_path, monkeypatch):
    import arenewalk.cli as cli_mod

    def boom(*args, **kwargs):
        raise ComputationError("norm drifted")

    monkeypatch.setattr(cli_mod.dtqw, "rank_nodes", boom)
    res = runner.invoke(
        main, ["rank", "-m", "benzene", "--out", str(tmp_path / "x")]
    )
    assert res.exit_code == 3
    assert "computation error" in res.output


def test_linalg_error_maps_to_exit_3(runner, tmp_path, monkeypatch):
    import arenewalk.cli as cli_mod

    def boom(*args, **kwargs):
        raise np.linalg.LinAlgError("eigh failed")

    monkeypatch.setattr(cli_mod.ctqw, "propagator", boom)
    res = runner.invoke(
        main,
        ["simulate", "-m", "benzene", "--t-max", "1", "--dt", "0.5",
         "--out", str(tmp_path / "x")],
    )
    assert res.exit_code == 3
    assert "computation error" in res.output
