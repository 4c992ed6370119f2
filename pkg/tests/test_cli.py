import pytest

from brickpart.io_cli.cli import main


def run_cli(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct_then_verify(tmp_path, capsys):
    doc = tmp_path / "slicing.json"
    code, _, _ = run_cli(capsys, "construct", "--family", "slicing3d", "--k", "4", "--out", str(doc))
    assert code == 0
    code, out, _ = run_cli(capsys, "verify", str(doc))
    assert code == 0
    assert "valid: yes" in out
    assert "slicing_number: 4" in out
    assert "incidence_F:" in out and "incidence_alpha:" in out
    assert "piercing_witness:" in out


def test_construct_writes_stdout(capsys):
    code, out, _ = run_cli(capsys, "construct", "--family", "grid", "--d", "2", "--k", "2")
    assert code == 0
    assert '"dim": 2' in out and out.count("[[") == 5  # parent + 4 bricks


def test_verify_invalid_document_exits_1(tmp_path, capsys):
    doc = tmp_path / "broken.json"
    doc.write_text(
        '{"dim": 1, "parent": [[0, 2]], "bricks": [[[0, 1]]]}\n'
    )
    code, out, _ = run_cli(capsys, "verify", str(doc))
    assert code == 1
    assert "valid: no" in out
    assert "gap" in out


def test_verify_overlap_reports_members(tmp_path, capsys):
    doc = tmp_path / "overlap.json"
    doc.write_text('{"dim": 1, "parent": [[0, 2]], "bricks": [[[0, 2]], [[0, 2]]]}\n')
    code, out, _ = run_cli(capsys, "verify", str(doc))
    assert code == 1
    assert "overlap" in out and "members" in out


def test_verify_unparseable_exits_2(tmp_path, capsys):
    doc = tmp_path / "junk.json"
    doc.write_text("not json at all")
    code, _, err = run_cli(capsys, "verify", str(doc))
    assert code == 2
    assert "error" in err


def test_bounds_output(capsys):
    code, out, _ = run_cli(capsys, "bounds", "--d", "3", "--k", "5")
    assert code == 0
    assert "elementary_piercing_lb(d=3, k=5): 44" in out
    assert "trivial_grid_ub(d=3, k=5): 125" in out
    assert "slicing_lb_3d(d=3, k=5): 9" in out


def test_search_exhaustion(capsys):
    code, out, _ = run_cli(
        capsys, "search", "--d", "2", "--k", "2", "--mode", "piercing",
        "--max-bricks", "3", "--grid", "3",
    )
    assert code == 0
    assert "status: exhausted_none" in out
    assert "grid_cap:" in out


def test_search_found_writes_witness(tmp_path, capsys):
    witness = tmp_path / "witness.json"
    code, out, _ = run_cli(
        capsys, "search", "--d", "2", "--k", "2", "--mode", "piercing",
        "--max-bricks", "4", "--grid", "3", "--out", str(witness),
    )
    assert code == 0
    assert "status: found" in out
    code, out, _ = run_cli(capsys, "verify", str(witness))
    assert code == 0
    assert "piercing_number: 2" in out


def test_search_node_budget_exit_code(capsys):
    code, out, _ = run_cli(
        capsys, "search", "--d", "2", "--k", "3", "--mode", "piercing",
        "--max-bricks", "7", "--grid", "4", "--node-budget", "5",
    )
    assert code == 1
    assert "resource_limit" in out


def test_export_svg(tmp_path, capsys):
    doc = tmp_path / "p2.json"
    run_cli(capsys, "construct", "--family", "piercing2d", "--k", "3", "--out", str(doc))
    out_file = tmp_path / "fig.svg"
    code, _, _ = run_cli(capsys, "export", str(doc), "--format", "svg", "--out", str(out_file))
    assert code == 0
    assert out_file.read_text().count("<rect") == 8


def test_export_wrong_dimension_exits_2(tmp_path, capsys):
    doc = tmp_path / "p3.json"
    run_cli(capsys, "construct", "--family", "piercing3d", "--k", "3", "--out", str(doc))
    code, _, err = run_cli(capsys, "export", str(doc), "--format", "svg")
    assert code == 2
    assert "error" in err


def test_construct_bad_k_exits_2(capsys):
    code, _, err = run_cli(capsys, "construct", "--family", "piercing3d", "--k", "2")
    assert code == 2
    assert "error" in err


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["construct", "--family", "nonsense", "--k", "3"])
    assert exc.value.code == 2


def test_missing_file_exits_2(capsys):
    code, _, err = run_cli(capsys, "verify", "/nonexistent/path.json")
    assert code == 2
