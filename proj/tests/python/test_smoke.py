"""Smoke tests for the python module (and the CLI when OPDC_CLI is set)."""

import json
import math
import os
import subprocess

import pytest

opdc = pytest.importorskip("opdc")

WORKED = dict(rho1="1", rho2="2", r1="1/4", r2="1/3")


def test_szego_and_classify():
    pair = opdc.szego_polynomials(["1/2", "-1/3"], 2)
    assert pair["phi"] == ["1/3", "-2/3", "1"]
    cls = opdc.classify(["-695/371"], 1)
    assert cls["epsilon"] == [-1]
    assert not cls["classical"]


def test_pencil_recurrence_exact():
    rec = opdc.pencil_recurrence(["1/2", "-1/3", "1/4"], "2", 3)
    assert rec["b"] == ["5/2", "-7/6", "11/12"]
    assert rec["u"] == ["0", "3/4", "32/9"]


def test_bi_family_worked_instance():
    coeffs = opdc.bi_coeffs(n=3, **WORKED)
    assert coeffs["A"][0] == "35/82"
    assert coeffs["C"][1] == "-117/82"

    seed = opdc.bi_seed(**WORKED)
    assert seed["a0"] == "599/697"
    assert seed["lambda_bi"] == "144/289"

    a = opdc.bi_reflection(n=2, **WORKED)
    assert a == ["599/697", "-695/371"]
    assert a == opdc.bi_reflection(n=2, mode="recursive", **WORKED)

    report = opdc.bi_identify_q(n=20, **WORKED)
    assert report["pass"] and report["lambda"] == "3"


def test_rw_bridge():
    beta = opdc.beta_map(**WORKED)
    assert [beta["beta1"], beta["beta2"], beta["beta3"], beta["beta4"]] == ["2", "2", "1/4", "1/6"]
    rw = opdc.rw_coeffs(beta["beta1"], beta["beta2"], beta["beta3"], beta["beta4"], 2)
    assert rw["A"][0] == "234/53"
    assert rw["C"][1] == "9/106"
    cbi = opdc.cbi_coeffs(n=3, **WORKED)
    assert cbi["v"] == ["0", "-234/53", "-9/106"]


def test_transforms_roundtrip():
    b = ["0"] * 8
    u = ["0"] + ["1/4"] * 7
    back = opdc.geronimus_roundtrip(b, u, "1")
    assert back["b"] == b[:7]
    assert back["u"] == u[:7]

    res = opdc.rescale(["1/2", "-1/3", "1/4", "0"], "144/289", "-12/17", "-119/144", 3)
    assert res["chi"] == "2"


def test_chihara_check():
    report = opdc.chihara_polynomial_check(
        A=["1", "3/4", "2/3", "5/8", "3/5"],
        C=["0", "1/4", "1/3", "3/8", "2/5"],
        alpha="0",
        c2="1",
        chi="0",
        depth=3,
    )
    assert report["pass"]


def test_float_layer():
    res = opdc.cholesky_darboux([2.0, 2.0], [1.0])
    assert res["diag"][0] == pytest.approx(2.5, abs=1e-12)
    assert res["eigenvalues"] == pytest.approx([1.0, 3.0], abs=1e-10)

    u = opdc.build_cmv(["0"] * 8, 8)
    for i, row in enumerate(u):
        for j, v in enumerate(row):
            assert v in (0.0, 1.0)
            if abs(i - j) > 2:
                assert v == 0.0

    report = opdc.verify_identities(["0"] * 16, 0.5, 0.75, 16)
    assert report["all_pass"]
    informational = [c for c in report["checks"] if c["informational"]]
    assert any(c["max_residual"] > 1e-3 for c in informational)


def test_chain_step_trivial_family():
    report = opdc.chain_step(["0"] * 16, 0.6, 0.4, -1.1, 16)
    assert any(s["trivial"] and s["residual"] < 1e-10 for s in report["solutions"])
    disc = 0.4 * 0.4 * (-1.1 - 0.6) * (-1.1 + 3 * 0.6)
    assert report["quadratic_discriminant"] == pytest.approx(disc)


def test_errors_are_typed():
    with pytest.raises(opdc.PoleInParameters):
        opdc.bi_coeffs("1", "1", "1", "1", 2)  # g = 0
    with pytest.raises(opdc.DegenerateReflection):
        opdc.build_lm(["1", "0", "0", "0"], 4)


CLI = os.environ.get("OPDC_CLI")


@pytest.mark.skipif(CLI is None, reason="OPDC_CLI not set")
class TestCli:
    def run(self, *args, env=None):
        full_env = dict(os.environ)
        if env:
            full_env.update(env)
        return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env)

    def test_families_worked_instance(self):
        res = self.run(
            "families", "bi", "--rho1", "1", "--rho2", "2", "--r1", "1/4", "--r2", "1/3",
            "-n", "3", "--output", "json",
        )
        assert res.returncode == 0
        data = json.loads(res.stdout)
        assert data["A0"] == "35/82"
        assert data["C1"] == "-117/82"

    def test_verify_identities_passes(self):
        res = self.run("verify", "identities", "--a", "0,0,0,0", "--lambda", "1/2", "-n", "64")
        assert res.returncode == 0
        data = json.loads(res.stdout)
        anticommutator = next(c for c in data["checks"] if "K(l)K(-l)" in c["identity"])
        assert anticommutator["max_residual"] < 1e-14

    def test_verify_bi_chain_exit_zero(self):
        res = self.run("verify", "bi-chain", "--seed", "7", "--trials", "25", "-n", "30")
        assert res.returncode == 0

    def test_byte_determinism_and_seed_env(self):
        args = ("verify", "bi-chain", "--seed", "3", "--trials", "5", "-n", "12")
        first = self.run(*args)
        second = self.run(*args)
        assert first.stdout == second.stdout
        env_run = self.run(*args, env={"OPDC_SEED": "99"})
        plain_99 = self.run("verify", "bi-chain", "--seed", "99", "--trials", "5", "-n", "12")
        assert env_run.stdout == plain_99.stdout

    def test_pole_maps_to_exit_two(self):
        res = self.run("families", "bi", "--rho1", "1", "--rho2", "1", "--r1", "1", "--r2", "1", "-n", "2")
        assert res.returncode == 2
        assert "factor" in res.stderr

    def test_json_tables_reparse_exactly(self):
        res = self.run(
            "families", "cbi", "--rho1", "1", "--rho2", "2", "--r1", "1/4", "--r2", "1/3", "-n", "4",
        )
        data = json.loads(res.stdout)
        v1 = data["v1"]
        num, den = v1.split("/")
        assert int(num) == -234 and int(den) == 53

    def test_spectrum_csv(self):
        res = self.run(
            "pencil", "--a", "0", "--lambda", "1", "-n", "6", "--spectrum", "--output", "csv",
        )
        assert res.returncode == 0
        values = [float(line) for line in res.stdout.strip().splitlines()]
        assert values == sorted(values)
