import json
import subprocess
import sys

import pytest

from mnrules import characters as ch
from mnrules import cli, golden, rules
from mnrules.harness import RuleSelector, expand, record_from_json, record_to_json
from mnrules.partitions import Partition
from mnrules.verify import SweepConfig, instances, run_sweep


def run(capsys, *argv):
    try:
        code = cli.main(list(argv))
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_expand_symplectic(capsys):
    code, out, _ = run(capsys, "expand", "--rule", "sp", "--mu", "4,3,1", "--r", "6", "--n", "3")
    assert code == 0
    assert out.strip() == "sp_(10,3,1) - sp_(8,5,1) + sp_(5,5,4) - sp_(4,3,3) + sp_(4) + sp_(2)"


def test_expand_classical(capsys):
    code, out, _ = run(capsys, "expand", "--rule", "classical", "--mu", "3,1", "--r", "4", "--n", "6")
    assert code == 0
    assert out.strip() == "s_(7,1) - s_(4,4) - s_(3,3,2) + s_(3,2,2,1) - s_(3,1,1,1,1,1)"


def test_expand_empty_partition(capsys):
    code, out, _ = run(capsys, "expand", "--rule", "sp", "--mu", "0", "--r", "1", "--n", "1")
    assert code == 0
    # p1bar * sp_() = x + 1/x = sp_(1)
    assert out.strip() == "sp_(1)"


def test_expand_even_orthogonal_fraction(capsys):
    code, out, _ = run(capsys, "expand", "--rule", "oe", "--mu", "2,1", "--r", "3", "--n", "3",
                       "--unmerged")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "additions: oe_(5,1) - oe_(3,3) - 1/2*oe_(2,2,2)"
    assert lines[1:] == ["removals: -oe_()", "third: -1/2*oe_(2,2,2) + oe_(2)"]


def test_expand_json_round_trip(capsys):
    code, out, _ = run(capsys, "expand", "--rule", "spo", "--mu", "2,2", "--r", "3", "--n", "2",
                       "--m", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["rule"] == "spo" and data["mu"] == [2, 2]
    rec = record_from_json(data)
    assert record_to_json(rec) == data
    original = expand(RuleSelector("spo", Partition([2, 2]), 3, 2, 2))
    assert rec.terms == original.terms and rec.mixed_terms == original.mixed_terms


@pytest.mark.parametrize("rule, mu, r, n, m", [
    ("oe", (2, 1), 3, 3, None), ("hook", (2, 1, 1), 2, 1, 1), ("classical", (), 2, 2, None),
])
def test_json_round_trip_many(rule, mu, r, n, m):
    rec = expand(RuleSelector(rule, Partition(mu), r, n, m))
    back = record_from_json(json.loads(json.dumps(record_to_json(rec))))
    assert back.terms == rec.terms
    assert back.evaluate() == rec.evaluate()


def test_expand_latex(capsys):
    code, out, _ = run(capsys, "expand", "--rule", "oe", "--mu", "2,1", "--r", "3", "--n", "3",
                       "--format", "latex")
    assert code == 0
    assert r"\frac{1}{2}" not in out  # the two halves merge
    assert r"\mathrm{oe}_{\emptyset}" in out


def test_oracle_outputs(capsys):
    code, out, _ = run(capsys, "oracle", "--char", "schur", "--lambda", "1", "--n", "2")
    assert (code, out.strip()) == (0, "x1 + x2")
    code, out, _ = run(capsys, "oracle", "--char", "sp", "--lambda", "1,1", "--n", "2")
    assert code == 0 and len(out.split(" + ")) == 5
    code, out, _ = run(capsys, "oracle", "--char", "spo", "--lambda", "1,1", "--n", "2", "--m", "1",
                       "--format", "json")
    assert code == 0 and len(json.loads(out)) == 10
    code, out, _ = run(capsys, "oracle", "--char", "skew_schur", "--lambda", "2,1/1", "--m", "2")
    assert code == 0 and out.strip() == "y1^2 + 2*y1*y2 + y2^2"


@pytest.mark.parametrize("argv", [
    ["expand", "--rule", "sp", "--mu", "3,x", "--r", "1", "--n", "2"],
    ["expand", "--rule", "sp", "--mu", "1,1,1", "--r", "1", "--n", "2"],
    ["expand", "--rule", "sp", "--mu", "1", "--r", "1", "--n", "2", "--m", "1"],
    ["expand", "--rule", "spo", "--mu", "1", "--r", "1", "--n", "2"],
    ["expand", "--rule", "sp", "--mu", "1", "--r", "0", "--n", "2"],
    ["expand", "--rule", "bogus", "--mu", "1", "--r", "1", "--n", "2"],
    ["oracle", "--char", "spo", "--lambda", "1", "--n", "2"],
    ["oracle", "--char", "sp", "--lambda", "1", "--n", "2", "--m", "1"],
    ["oracle", "--char", "nothing", "--lambda", "1", "--n", "2"],
    ["verify", "--rules", "sp,nope"],
    ["expand", "--rule", "classical", "--mu", "1", "--r", "1", "--n", "2", "--unmerged"],
])
def test_usage_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_route_mismatch_exits_three(capsys, monkeypatch):
    monkeypatch.setattr(ch, "symplectic_king", lambda lam, n: ch.LaurentPoly.constant(5, n))
    code, _, err = run(capsys, "oracle", "--char", "sp", "--lambda", "1", "--n", "2")
    assert code == 3
    assert "internal inconsistency" in err


def test_verify_vacuous(capsys):
    code, out, _ = run(capsys, "verify", "--max-r", "0")
    assert code == 0
    assert "total: 0/0 passed, 0 failed" in out


def test_verify_small_passes(capsys):
    code, out, _ = run(capsys, "verify", "--max-size", "3", "--max-n", "2", "--max-m", "1",
                       "--max-r", "3", "--jobs", "1")
    assert code == 0
    assert "spo:" in out and "hook:" in out


def test_mutation_is_pinpointed(capsys, monkeypatch):
    real = rules.border_strip_additions

    def flipped(mu, r, n=None):
        return [(eta, h + 1 if h == 1 else h) for eta, h in real(mu, r, n)]

    monkeypatch.setattr(rules, "border_strip_additions", flipped)
    code, out, _ = run(capsys, "verify", "--rules", "sp", "--max-size", "3", "--max-n", "2",
                       "--max-r", "3", "--jobs", "1")
    assert code == 1
    record = json.loads(out[out.index("{"):])["first_failure"]
    assert record["rule"] == "sp"
    assert set(record) >= {"n", "r", "mu", "lhs", "rhs", "difference"}
    sel = RuleSelector("sp", Partition(record["mu"]), record["r"], record["n"])
    heights = [h for _, h in real(sel.mu, sel.r, sel.n)]
    assert 1 in heights


def test_sweep_independent_of_parallelism():
    config = dict(max_partition_size=3, max_n=2, max_m=1, max_r=3)
    serial = run_sweep(SweepConfig(**config, parallelism=1))
    parallel = run_sweep(SweepConfig(**config, parallelism=2))
    assert serial.per_rule == parallel.per_rule
    assert serial.ok and parallel.ok


def test_sweep_instance_bounds():
    sels = list(instances(SweepConfig(max_partition_size=6, max_n=3, max_m=2, max_r=6)))
    hook = [s for s in sels if s.rule == "hook"]
    assert max(s.n for s in hook) == 2 and max(s.r for s in hook) == 4
    assert max(s.mu.size for s in hook) == 5
    assert any(len(s.mu) > s.n for s in hook)
    assert all(len(s.mu) <= s.n for s in sels if s.rule != "hook")


def test_config_validation():
    with pytest.raises(ValueError):
        SweepConfig(max_r=-1)
    with pytest.raises(ValueError):
        SweepConfig(rules=("nope",))


def test_golden_check_clean(capsys):
    code, out, _ = run(capsys, "golden")
    assert code == 0 and "matches" in out


def test_golden_round_trip_and_drift(capsys, tmp_path, monkeypatch):
    code, out, _ = run(capsys, "golden", "--write", "--out", str(tmp_path))
    assert code == 0 and len(list(tmp_path.glob("*.json"))) == 8
    monkeypatch.setenv(golden.ENV_VAR, str(tmp_path))
    assert run(capsys, "golden")[0] == 0
    target = tmp_path / "oe_p3_oe21.json"
    target.write_text(target.read_text().replace('"-1"', '"-1/2"', 1))
    code, out, _ = run(capsys, "golden")
    assert code == 1
    assert "--- golden/oe_p3_oe21.json" in out
    target.unlink()
    code, out, _ = run(capsys, "golden")
    assert code == 1 and "missing golden file" in out


def test_golden_contents():
    docs = golden.golden_documents()
    oe = docs["oe_p3_oe21.json"]
    coeffs = {tuple(t["partition"]): t["coeff"] for t in oe["terms"]}
    assert coeffs[(2, 2, 2)] == "-1"
    spo = docs["spo_p3_spo22.json"]
    assert len(spo["mixed_terms"]) == 4
    assert all(t["coeff"] == "-1" for t in spo["mixed_terms"])
    assert docs["mu_q_example.json"]["mu_q"] == [3, 3, 3]


def test_output_is_deterministic(capsys):
    argv = ["expand", "--rule", "spo", "--mu", "2,2", "--r", "3", "--n", "2", "--m", "2",
            "--format", "json"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "mnrules.cli", "expand", "--rule", "oo", "--mu", "2,1", "--r", "2",
         "--n", "3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "oo_(4,1) - oo_(2,1,1)"
    proc = subprocess.run([sys.executable, "-m", "mnrules.cli", "expand", "--rule", "sp"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 2
