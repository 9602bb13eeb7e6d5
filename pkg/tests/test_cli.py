"""Command-line interface: files in, CSV/JSON out, exit codes."""

import json

import numpy as np
import pytest

from inkbasis import load_basis
from inkbasis.cli import main

INKML_DOC = """<ink xmlns="http://www.w3.org/2003/InkML">
  <annotation type="truth">a</annotation>
  <trace>0 0, 10 2, 20 8, 30 18</trace>
  <trace>30 18, 40 30, 50 45</trace>
</ink>
"""

# 8-point integer prototypes in pendigits layout (16 coords + class)
_PROTO = {
    0: [(30, 90), (10, 60), (10, 30), (30, 5), (70, 5), (90, 30), (90, 60), (70, 90)],
    1: [(50, 95), (50, 80), (50, 65), (50, 50), (50, 35), (50, 20), (50, 10), (50, 0)],
    7: [(10, 90), (50, 90), (90, 90), (75, 65), (60, 45), (50, 30), (42, 15), (35, 0)],
}


def write_pendigits(path, per_class=12, seed=0):
    rng = np.random.default_rng(seed)
    lines = []
    for label, proto in _PROTO.items():
        for _ in range(per_class):
            pts = np.array(proto) + rng.integers(-2, 3, size=(8, 2))
            pts = np.clip(pts, 0, 100)
            flat = ",".join(str(int(v)) for v in pts.ravel())
            lines.append(f"{flat},{label}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return len(lines)


def straight_line_pendigits(path):
    pts = [(10 * i, 10 * i) for i in range(8)]
    flat = ",".join(str(v) for xy in pts for v in xy)
    path.write_text(f"{flat},1\n", encoding="utf-8")


class TestBuildBasis:
    def test_writes_loadable_json(self, tmp_path):
        out = tmp_path / "basis.json"
        rc = main(["build-basis", "--basis", "chebyshev-sobolev", "--degree", "6",
                   "--out", str(out)])
        assert rc == 0
        basis = load_basis(out)
        assert basis.degree == 6
        assert basis.spec.lam == 0.125

    def test_lambda_flag(self, tmp_path):
        out = tmp_path / "basis.json"
        assert main(["build-basis", "--basis", "legendre-sobolev", "--lambda", "0.5",
                     "--degree", "4", "--out", str(out)]) == 0
        assert load_basis(out).spec.lam == 0.5


class TestApproximate:
    def test_one_csv_per_trace(self, tmp_path):
        data = tmp_path / "digits.txt"
        n = write_pendigits(data, per_class=2)
        outdir = tmp_path / "approx"
        rc = main(["approximate", str(data), "--degree", "5", "--out", str(outdir)])
        assert rc == 0
        files = sorted(outdir.glob("*.csv"))
        assert len(files) == n
        header, *rows = files[0].read_text().strip().splitlines()
        assert header == "s,x,y,kind"
        kinds = {r.rsplit(",", 1)[1] for r in rows}
        assert kinds == {"original", "approx"}
        assert sum(r.endswith("approx") for r in rows) == 200

    def test_missing_input_exits_2(self, tmp_path, capsys, monkeypatch):
        monkeypatch.delenv("INKBASIS_DATA_DIR", raising=False)
        rc = main(["approximate", str(tmp_path / "nope.txt"), "--out", str(tmp_path / "o")])
        assert rc == 2
        assert "not found" in capsys.readouterr().err

    def test_degree_zero_rejected(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            main(["approximate", "x.txt", "--degree", "0", "--out", str(tmp_path / "o")])
        assert exc.value.code == 2

    def test_inkml_input(self, tmp_path):
        doc = tmp_path / "sym.inkml"
        doc.write_text(INKML_DOC, encoding="utf-8")
        outdir = tmp_path / "approx"
        assert main(["approximate", str(doc), "--out", str(outdir)]) == 0
        # strokes merge into one symbol, labeled from the annotation
        assert len(list(outdir.glob("*.csv"))) == 1
        assert list(outdir.glob("*_a.csv"))


class TestReconstruct:
    def test_row_counts(self, tmp_path):
        data = tmp_path / "digits.txt"
        straight_line_pendigits(data)
        out = tmp_path / "recon.csv"
        assert main(["reconstruct", str(data), "--degree", "4", "--out", str(out)]) == 0
        header, *rows = out.read_text().strip().splitlines()
        assert header == "trace_id,point_index,kind,x,y"
        assert sum(",original," in r for r in rows) == 8
        assert sum(",reconstructed," in r for r in rows) == 8

    def test_line_reconstructs_exactly(self, tmp_path):
        data = tmp_path / "digits.txt"
        straight_line_pendigits(data)
        out = tmp_path / "recon.csv"
        main(["reconstruct", str(data), "--degree", "4", "--out", str(out)])
        rows = out.read_text().strip().splitlines()[1:]
        orig = {r.split(",")[1]: r.split(",")[3:] for r in rows if ",original," in r}
        reco = {r.split(",")[1]: r.split(",")[3:] for r in rows if ",reconstructed," in r}
        for idx, (x, y) in orig.items():
            rx, ry = reco[idx]
            assert float(rx) == pytest.approx(float(x), abs=1e-8)
            assert float(ry) == pytest.approx(float(y), abs=1e-8)


class TestErrorSweep:
    def test_straight_line_errors_are_tiny(self, tmp_path):
        data = tmp_path / "line.txt"
        straight_line_pendigits(data)
        out = tmp_path / "err.csv"
        rc = main(["error-sweep", str(data), "--d-min", "1", "--d-max", "8",
                   "--out", str(out)])
        assert rc == 0
        rows = out.read_text().strip().splitlines()[1:]
        assert len(rows) == 8
        assert all(float(r.split(",")[2]) <= 1e-8 for r in rows)

    def test_default_degree_range(self, tmp_path):
        data = tmp_path / "line.txt"
        straight_line_pendigits(data)
        out = tmp_path / "err.csv"
        assert main(["error-sweep", str(data), "--out", str(out)]) == 0
        degrees = [int(r.split(",")[1]) for r in out.read_text().strip().splitlines()[1:]]
        assert degrees == list(range(3, 21))

    def test_empty_input_gives_header_only(self, tmp_path):
        data = tmp_path / "empty.txt"
        data.write_text("", encoding="utf-8")
        out = tmp_path / "err.csv"
        assert main(["error-sweep", str(data), "--out", str(out)]) == 0
        assert out.read_text() == "trace_id,degree,error\n"

    def test_byte_identical_rerun(self, tmp_path):
        data = tmp_path / "digits.txt"
        write_pendigits(data, per_class=2)
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        main(["error-sweep", str(data), "--d-max", "6", "--out", str(out1)])
        main(["error-sweep", str(data), "--d-max", "6", "--out", str(out2)])
        assert out1.read_bytes() == out2.read_bytes()


class TestKnnEval:
    def test_table_and_summary(self, tmp_path):
        data = tmp_path / "digits.txt"
        write_pendigits(data, per_class=12)
        out = tmp_path / "knn.csv"
        rc = main(["knn-eval", str(data), "--degree", "6", "--k-min", "1",
                   "--k-max", "10", "--out", str(out)])
        assert rc == 0
        header, *rows = out.read_text().strip().splitlines()
        assert header == "basis,k,accuracy,error_rate"
        assert len(rows) == 4 * 10
        summary = json.loads((tmp_path / "knn.summary.json").read_text())
        assert set(summary["best_basis_per_k"]) == {str(k) for k in range(1, 11)}

    def test_k_bounds_validated(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            main(["knn-eval", "x.txt", "--k-min", "5", "--k-max", "2",
                  "--out", str(tmp_path / "o.csv")])
        assert exc.value.code == 2

    def test_byte_identical_rerun(self, tmp_path):
        data = tmp_path / "digits.txt"
        write_pendigits(data, per_class=6)
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        for out in (out1, out2):
            main(["knn-eval", str(data), "--degree", "5", "--k-max", "3",
                  "--out", str(out)])
        assert out1.read_bytes() == out2.read_bytes()


class TestDataDirResolution:
    def test_relative_path_resolves_through_env(self, tmp_path, monkeypatch):
        data = tmp_path / "digits.txt"
        write_pendigits(data, per_class=2)
        monkeypatch.setenv("INKBASIS_DATA_DIR", str(tmp_path))
        monkeypatch.chdir(tmp_path / "..")
        out = tmp_path / "err.csv"
        assert main(["error-sweep", "digits.txt", "--d-max", "4", "--out", str(out)]) == 0

    def test_default_pendigits_discovery(self, tmp_path, monkeypatch):
        write_pendigits(tmp_path / "pendigits.tra", per_class=2)
        monkeypatch.setenv("INKBASIS_DATA_DIR", str(tmp_path))
        out = tmp_path / "err.csv"
        assert main(["error-sweep", "--d-max", "4", "--out", str(out)]) == 0

    def test_no_input_no_env_exits_2(self, tmp_path, monkeypatch, capsys):
        monkeypatch.delenv("INKBASIS_DATA_DIR", raising=False)
        rc = main(["error-sweep", "--out", str(tmp_path / "o.csv")])
        assert rc == 2
        assert "INKBASIS_DATA_DIR" in capsys.readouterr().err
