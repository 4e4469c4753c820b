"""Command line surface: subcommands, formats, config, exit codes."""

from __future__ import annotations

import json

import pytest

from idealclass import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# classify


def test_classify_table(capsys):
    code, out, err = run(capsys, "classify", "--ring", "zn:12", "--ideal", "(0)")
    assert code == 0
    assert "ring: zn:12" in out
    assert "ideal: (0)" in out
    lines = dict(
        tuple(part.strip() for part in line.split(":", 1))
        for line in out.strip().splitlines()
    )
    assert lines["2AP"] == "yes"
    assert lines["2-absorbing"] == "no"
    assert lines["primary"] == "no"
    assert lines["2-ord"] == "2"
    assert lines["2-e"] == "2"
    assert lines["special"] == "no"


def test_classify_json_round_trips(capsys):
    code, out, err = run(
        capsys, "classify", "--ring", "zn:12", "--ideal", "[6]", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["ring"] == "zn:12"
    assert data["special"] is True
    assert data["twoOrd"] == 1
    assert out == json.dumps(data, indent=2) + "\n"


def test_classify_non_modular_rings(capsys):
    code, out, _ = run(
        capsys, "classify", "--ring", "idz:(zn:2)^2", "--ideal", "(0)",
        "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["primary"] is True and data["ord"] == 2

    code, out, _ = run(
        capsys, "classify", "--ring", "prod:(zn:2,zn:3)", "--ideal", "[]",
        "--format", "json")
    assert code == 0
    assert json.loads(out)["special"] is True


def test_classify_bad_inputs(capsys):
    code, _, err = run(capsys, "classify", "--ring", "zn:x", "--ideal", "(0)")
    assert code == 2 and err
    code, _, err = run(capsys, "classify", "--ring", "zn:6", "--ideal", "oops")
    assert code == 2 and err


def test_classify_cap_exit(capsys):
    code, _, err = run(capsys, "classify", "--ring", "zn:625", "--ideal", "(0)")
    assert code == 3
    assert "cap" in err.lower()
    code, out, _ = run(
        capsys, "classify", "--ring", "zn:625", "--ideal", "(0)",
        "--caps", "cubic=625", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["ord"] == 4 and data["twoOrd"] == 1


# ---------------------------------------------------------------------------
# zideal


def test_zideal_small_modulus(capsys):
    code, out, _ = run(capsys, "zideal", "12")
    assert code == 0
    assert "verified against the zero ideal of zn:12" in out
    assert "u2AP" in out and "yes" in out


def test_zideal_zero(capsys):
    code, out, _ = run(capsys, "zideal", "0")
    assert code == 0
    assert "analytic" in out


def test_zideal_factored_form_above_cap(capsys):
    code, out, _ = run(capsys, "zideal", "2^20*3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["bridge"] == "skipped"
    assert data["value"] == 2**20 * 3
    assert data["report"]["twoOrd"] == 20


def test_zideal_rejects_one_and_garbage(capsys):
    for arg in ("1", "-3", "x", "2*2"):
        code, _, err = run(capsys, "zideal", arg)
        assert code == 2 and err


# ---------------------------------------------------------------------------
# enumerate


def test_enumerate_table(capsys):
    code, out, err = run(capsys, "enumerate", "--ring", "zn:12")
    assert code == 0
    assert "5 proper ideals" in err
    lines = out.strip().splitlines()
    assert lines[0].split()[:3] == ["ideal", "prime", "primary"]
    assert len(lines) == 6  # header + 5 ideals
    assert any(line.startswith("(0)") for line in lines[1:])


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--ring", "zn:6", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert isinstance(data, list) and len(data) == 3
    zero = [d for d in data if d["ideal"]["gens"] in ([], [0])]
    assert zero and zero[0]["special"] is True


# ---------------------------------------------------------------------------
# verify


def test_verify_list(capsys):
    code, out, err = run(capsys, "verify", "--list")
    assert code == 0
    ids = out.split()
    assert len(ids) == 26 and ids[0] == "uni-abs"
    assert "out of scope: chain, valuation, content, pruf" in err


def test_verify_single_theorem(capsys):
    code, out, err = run(capsys, "verify", "--theorem", "rad", "--corpus", "zn:2..12")
    assert code == 0
    assert out.startswith("rad: passed")
    assert "instances=" in out and "counterexamples=0" in out
    assert "1 theorems, 0 failures" in err


def test_verify_json_is_machine_readable(capsys):
    code, out, _ = run(
        capsys, "verify", "--theorem", "intersection", "--corpus", "zn:2..10",
        "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert isinstance(data, list) and data[0]["theorem"] == "intersection"
    assert data[0]["verdict"] == "passed"
    assert out == json.dumps(data, indent=2) + "\n"


def test_verify_mutant_fails_with_exit_1(capsys):
    code, out, err = run(
        capsys, "verify", "--theorem", "uni-abs", "--corpus", "zn:2..30", "--mutant")
    assert code == 1
    assert "uni-abs [mutant]: failed" in out
    assert "1 failures" in err
    assert '"ring"' in err  # first counterexamples echoed as JSON lines


def test_verify_out_of_scope_and_unknown(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "chain")
    assert code == 2
    assert "chain" in err and "scope" in err.lower()
    code, _, err = run(capsys, "verify", "--theorem", "nonsense")
    assert code == 2


def test_verify_corpus_file(tmp_path, capsys):
    path = tmp_path / "corpus.txt"
    path.write_text("# small moduli\nzn:2..6\nprod:(zn:2,zn:2)\n")
    code, out, _ = run(
        capsys, "verify", "--theorem", "rad", "--corpus", f"@{path}")
    assert code == 0 and "passed" in out
    # bare path works too
    code, out, _ = run(capsys, "verify", "--theorem", "rad", "--corpus", str(path))
    assert code == 0 and "passed" in out


def test_verify_workers_agree(capsys):
    args = ("verify", "--theorem", "main1", "--corpus", "zn:2..24", "--format", "json")
    code1, out1, _ = run(capsys, *args, "--workers", "1")
    code2, out2, _ = run(capsys, *args, "--workers", "4")
    assert code1 == code2 == 0
    assert out1 == out2


# ---------------------------------------------------------------------------
# search


def test_search_table_and_limit(capsys):
    code, out, err = run(
        capsys, "search", "--where", "special && !primary",
        "--corpus", "zn:2..30", "--limit", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 3
    assert lines[0].startswith("zn:6")
    assert "matches" in err


def test_search_json(capsys):
    code, out, _ = run(
        capsys, "search", "--where", "u2ap && !twoAbsorbing",
        "--corpus", "zn:2..20", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data and all(m["report"]["uniformlyTwoAbsorbingPrimary"] for m in data)


def test_search_no_matches_is_success(capsys):
    code, out, err = run(
        capsys, "search", "--where", "prime && !proper", "--corpus", "zn:2..8")
    assert code == 0
    assert out.strip() == ""
    assert "0 matches" in err


def test_search_literals(capsys):
    code, out, _ = run(capsys, "search", "--where", "false", "--corpus", "zn:2..8")
    assert code == 0 and out.strip() == ""
    code, out, _ = run(capsys, "search", "--where", "true", "--corpus", "zn:4")
    assert code == 0 and len(out.strip().splitlines()) == 2


def test_search_boolean_ring_has_no_nonmaximal_irreducibles(capsys):
    code, out, _ = run(
        capsys, "search", "--where", "irreducible && !maximal",
        "--corpus", "prod:(zn:2,zn:2,zn:2)")
    assert code == 0
    assert out.strip() == ""


def test_search_parse_error(capsys):
    code, _, err = run(capsys, "search", "--where", "ord ==", "--corpus", "zn:2..6")
    assert code == 2
    assert "^" in err  # caret marks the failing column


# ---------------------------------------------------------------------------
# global flags and config


def test_config_file_sets_defaults(tmp_path, capsys):
    cfg = tmp_path / "idealclass.cfg"
    cfg.write_text("# defaults\nformat=json\ncaps=cubic=625\n")
    code, out, _ = run(
        capsys, "classify", "--ring", "zn:625", "--ideal", "(0)",
        "--config", str(cfg))
    assert code == 0
    assert json.loads(out)["ord"] == 4

    # explicit flag beats the config value
    code, out, _ = run(
        capsys, "classify", "--ring", "zn:12", "--ideal", "(0)",
        "--config", str(cfg), "--format", "table")
    assert code == 0
    assert "ring: zn:12" in out


def test_config_rejects_unknown_keys(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("colour=blue\n")
    code, _, err = run(
        capsys, "classify", "--ring", "zn:6", "--ideal", "(0)", "--config", str(cfg))
    assert code == 2 and "colour" in err


def test_missing_config_file(capsys):
    code, _, err = run(
        capsys, "classify", "--ring", "zn:6", "--ideal", "(0)",
        "--config", "/nonexistent/path.cfg")
    assert code == 2 and err


def test_bad_caps_flag(capsys):
    code, _, err = run(
        capsys, "classify", "--ring", "zn:6", "--ideal", "(0)", "--caps", "wat=1")
    assert code == 2 and "wat" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["classify", "--no-such-flag"])
    assert info.value.code == 2
    capsys.readouterr()


def test_no_subcommand_prints_usage(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main([])
    assert info.value.code == 2
    capsys.readouterr()
