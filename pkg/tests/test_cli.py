import json
import subprocess
import sys

import pytest

from bistable import laws
from bistable.cli import main
from bistable.report import AnalysisReport


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_product_boolean_fig5(capsys):
    code, out, _ = run(capsys, "product", "--boolean", "fig5_x", "fig5_y")
    assert code == 0
    assert out == "3 3\n1 1 1\n1 1 1\n0 0 1\n"
    _, z, _ = run(capsys, "generate", "fig5_z")
    assert out == z


def test_product_other_examples(capsys):
    _, out, _ = run(capsys, "product", "--kronecker", "identity(2)", "identity(2)")
    assert out == "4 4\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n"
    _, out, _ = run(capsys, "product", "--boolean", "fig5_x", "identity(3)")
    assert out == "3 3\n1 1 0\n1 1 1\n0 0 1\n"
    code, _, err = run(capsys, "product", "--boolean", "fig5_x", "ones(2)")
    assert code == 1 and "error" in err


def test_analyze_json_fig5(capsys):
    code, out, _ = run(capsys, "analyze", "fig5_x", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1
    assert data["block_sizes"] == [2, 1]
    assert data["forced_edges"] == [[3, 3]]
    assert data["fully_indecomposable"] is False
    assert data["term_rank"] == 3 and data["permanent"] == 2


def test_analyze_other_examples(capsys):
    data = json.loads(run(capsys, "analyze", "identity(3)", "--format", "json")[1])
    assert data["bistable"] is False and data["block_sizes"] == [1, 1, 1]
    data = json.loads(run(capsys, "analyze", "cycle(4)", "--format", "json")[1])
    assert data["fully_indecomposable"] is True and data["alpha_stable"] is True


def test_text_and_json_agree(capsys):
    for name in ("fig5_x", "fig1_g2", "fig4_g", "nk2(2)"):
        _, text, _ = run(capsys, "analyze", name)
        _, js, _ = run(capsys, "analyze", name, "--format", "json")
        from_text = AnalysisReport.from_text(text)
        from_json = AnalysisReport.model_validate_json(js)
        assert from_text == from_json
        assert json.loads(js) == json.loads(from_json.to_json())


def test_analyze_reports_nulls_and_guard_exit(capsys):
    code, out, err = run(capsys, "analyze", "nk2(7)", "--format", "json", "--limit", "10")
    assert code == 3
    data = json.loads(out)
    assert data["alpha_minus"] is None and "alpha_minus" in data["suppressed"]
    assert "size guard" in err
    data = json.loads(run(capsys, "analyze", "fig1_g2", "--format", "json")[1])
    assert data["permanent"] is None and data["block_sizes"] is None and data["suppressed"] == []


def test_guard_env_override(capsys, monkeypatch):
    monkeypatch.setenv("BISTABLE_MAX_ORACLE", "6")
    code, out, _ = run(capsys, "analyze", "cycle(4)", "--format", "json")
    assert code == 3 and json.loads(out)["alpha_minus"] is None


def test_files_and_parse_errors(capsys, tmp_path):
    good = tmp_path / "x.01m"
    good.write_text("2 2\n1 1\n1 1\n")
    assert run(capsys, "analyze", str(good))[0] == 0
    edges = tmp_path / "g.txt"
    edges.write_text("2 2\n1 1\n2 2\n")
    code, out, _ = run(capsys, "analyze", str(edges), "--as", "bge")
    assert code == 0 and "block_sizes: [1, 1]" in out
    bad = tmp_path / "bad.01m"
    bad.write_text("2 2\n1 1\n1 7\n")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 2 and "line 3, column 3" in err
    code, _, err = run(capsys, "analyze", str(tmp_path / "missing.01m"))
    assert code == 1


def test_decompose(capsys, tmp_path):
    code, out, _ = run(capsys, "decompose", "fig5_x")
    assert code == 0
    assert out.splitlines()[:3] == ["P=[1,2,3]", "Q=[1,2,3]", "blocks=[2,1]"]
    assert out.splitlines()[3:] == ["3 3", "1 1 0", "1 1 1", "0 0 1"]
    assert "blocks=[1,1]" in run(capsys, "decompose", "identity(2)")[1]
    assert "blocks=[3]" in run(capsys, "decompose", "cycle(3)")[1]
    deficient = tmp_path / "d.01m"
    deficient.write_text("2 2\n1 1\n0 0\n")
    assert run(capsys, "decompose", str(deficient))[0] == 4


def test_generate(capsys):
    _, a, _ = run(capsys, "generate", "random_with_pm", "--n", "5", "--seed", "9")
    _, b, _ = run(capsys, "generate", "random_with_pm", "--n", "5", "--seed", "9")
    assert a == b and a.startswith("5 5\n")
    _, out, _ = run(capsys, "generate", "fig5_x", "--as", "bge")
    assert out == "3 3\n1 1\n1 2\n2 1\n2 2\n2 3\n3 3\n"
    _, out, _ = run(capsys, "generate", "cycle", "--n", "3")
    assert out == "3 3\n1 1 0\n0 1 1\n1 0 1\n"
    assert run(capsys, "generate", "random_balanced")[0] == 1
    assert run(capsys, "generate", "nosuch")[0] == 1


def test_verify_laws_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "laws", "--seed", "1", "--count", "200", "--max-n", "6")
    assert code == 0
    assert out.strip().endswith("0 failed")


def test_verify_catches_a_corrupted_law(capsys, monkeypatch):
    def wrong(ctx):
        for _ in range(ctx.count):
            x = ctx.matrix()
            # deliberately false: not every matrix has a perfect matching
            laws.expect(laws.has_perfect_matching(x), "corrupted law", x)
        return ctx.count

    monkeypatch.setitem(laws.LAWS, "corrupted", laws.Law("corrupted", "laws", wrong))
    code, out, _ = run(capsys, "verify", "--suite", "laws", "--count", "50", "--max-n", "4")
    assert code != 0
    assert "FAIL  laws/corrupted" in out


def test_verify_oracle_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "oracle", "--max-n", "3")
    assert code == 0 and "failed" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bistable", "product", "--boolean", "fig5_x", "fig5_y"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert proc.stdout == "3 3\n1 1 1\n1 1 1\n0 0 1\n"


@pytest.mark.parametrize("argv", [[], ["product", "fig5_x", "fig5_y"], ["analyze"]])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2
