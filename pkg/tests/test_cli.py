from __future__ import annotations

import subprocess
import sys

import pytest

from trimatroid.cli import main
from trimatroid.harness import reverify_report


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_catalog_list_and_show(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and "AG23" in out
    code, out, _ = run(capsys, "catalog", "show", "F7")
    assert code == 0 and out.startswith("name F7\nkind linear")


def test_query_from_file(tmp_path, capsys):
    path = tmp_path / "ag.txt"
    main(["catalog", "show", "AG23"])
    path.write_text(capsys.readouterr().out)
    code, out, _ = run(capsys, "query", "triangles", "--input", str(path))
    assert code == 0 and "min=4 max=4" in out


def test_minor_and_iso(capsys):
    code, out, _ = run(capsys, "minor", "--input", "catalog:J", "--target", "catalog:P7",
                       "--structured")
    assert code == 0 and all(ok for _, ok in reverify_report(out))
    code, out, _ = run(capsys, "minor", "--input", "catalog:AG23", "--target", "catalog:U2,4",
                       "--restriction", "--structured")
    assert code == 1 and out.splitlines()[-1].startswith("overall\tfail")
    code, out, _ = run(capsys, "iso", "--input", "catalog:W2", "--other", "catalog:U2,4",
                       "--structured")
    assert code == 0 and all(ok for _, ok in reverify_report(out))


def test_sum(capsys):
    code, out, _ = run(capsys, "sum", "1", "--input", "catalog:U2,4", "--other", "catalog:F7")
    assert code == 2  # labels overlap, so this is not a 1-sum


def test_exit_code_two_on_bad_input(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("kind linear\nsize 2\nfield 2\nrows 1\n1 0 1\n")
    code, _, err = run(capsys, "query", "rank", "--input", str(bad))
    assert code == 2 and "line 5" in err
    code, _, err = run(capsys, "query", "rank", "--input", str(tmp_path / "missing.txt"))
    assert code == 2
    code, _, err = run(capsys, "verify", "thm2", "--input", "catalog:W3")
    assert code == 2 and "GF(3)" in err
    with pytest.raises(SystemExit) as exc:
        main(["verify", "bogus"])
    assert exc.value.code == 2


def test_graph_verifiers(tmp_path, capsys):
    g = tmp_path / "k4.txt"
    g.write_text("4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    assert run(capsys, "verify", "claim7", "--input", str(g))[0] == 0
    code, out, _ = run(capsys, "verify", "dirac", "--input", str(g), "--structured")
    assert code == 0 and all(ok for _, ok in reverify_report(out))


def test_figures(tmp_path, capsys):
    code, _, err = run(capsys, "verify", "thm2", "--input", "catalog:AG23", "--figures",
                       str(tmp_path))
    assert code == 0 and (tmp_path / "verify-thm2-status.png").exists()


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "trimatroid.cli", "catalog", "show", "U2,4"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "circuits 4" in res.stdout
