"""Command-line surface: subcommands, JSON output, exit codes."""

import json
import subprocess
import sys

from revolutio.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestAnalyze:
    def test_paraboloid(self, capsys):
        code, doc = run_cli(capsys, "analyze", "--implicit", "x^2+y^2-z")
        assert code == 0
        assert doc["schema"] == "revolutio/1"
        assert doc["p2_decomposition"]["delta"] == 1
        assert doc["complex_parametrization"]["verification"] == {
            "on_surface": True,
            "jacobian_rank": 2,
        }
        assert doc["real_verdict"]["status"] == "real-proper"
        assert doc["conjecture_predicate"]["status"] == "satisfied"
        assert doc["quadric"]["class"] == "elliptic-paraboloid"

    def test_cylinder_refused(self, capsys):
        code, doc = run_cli(capsys, "analyze", "--implicit", "x^2+y^2-1")
        assert code == 3
        assert doc["error"]["code"] == "CYLINDER"

    def test_sphere(self, capsys):
        code, doc = run_cli(capsys, "analyze", "--implicit", "x^2+y^2+z^2-1")
        assert code == 0
        assert doc["real_verdict"]["status"] == "no-real-parametrization"
        assert doc["real_verdict"]["code"] == "NO_REAL_PARAMETRIZATION"
        assert doc["complex_parametrization"]["verification"]["on_surface"] is True
        assert doc["quadric"]["polynomial_over_R"] == "no"

    def test_two_sheet_fiber(self, capsys):
        code, doc = run_cli(capsys, "analyze", "--implicit", "x^2+y^2-z^2+1")
        assert code == 0
        rv = doc["real_verdict"]
        assert rv["status"] == "real-nonproper-double-cover"
        assert rv["fiber_count"] == 2
        assert rv["fiber_sample"] == ["1", "1"]

    def test_empty_real_locus_reported_not_fatal(self, capsys):
        # the leading space keeps argparse from reading the expression as a flag
        code, doc = run_cli(capsys, "analyze", "--p2", " -t^2-1", "t")
        assert code == 0
        assert doc["real_verdict"]["code"] == "EMPTY_REAL_LOCUS"
        assert doc["complex_parametrization"]["verification"]["on_surface"] is True

    def test_p2_input(self, capsys):
        code, doc = run_cli(capsys, "analyze", "--p2", "t^3+1", "t")
        assert code == 0
        assert doc["p2_decomposition"]["delta"] == 3
        assert doc["real_verdict"]["status"] == "real-proper"  # hard-coded cubic

    def test_p2_rational_input(self, capsys):
        code, doc = run_cli(capsys, "analyze", "--p2-rational", "1", "s", "1", "s^2")
        assert code == 0
        assert doc["p2_decomposition"]["delta"] == 1

    def test_unresolved_reported_not_fatal(self, capsys):
        code, doc = run_cli(capsys, "analyze", "--p2", "t^4+t", "t")
        assert code == 0
        assert doc["real_verdict"]["code"] == "UNRESOLVED"
        assert doc["real_verdict"]["witness"] is None
        assert doc["complex_parametrization"]["verification"]["on_surface"] is True

    def test_not_sor(self, capsys):
        code, doc = run_cli(capsys, "analyze", "--implicit", "x*y-z")
        assert code == 3
        assert doc["error"]["code"] == "NOT_SOR"

    def test_not_a_graph(self, capsys):
        code, doc = run_cli(capsys, "analyze", "--implicit", "x^2+y^2-z*x^2-z*y^2")
        assert code == 3
        assert doc["error"]["code"] == "NOT_A_GRAPH"

    def test_degenerate_profile(self, capsys):
        code, doc = run_cli(capsys, "analyze", "--p2", "t", "3")
        assert code == 3
        assert doc["error"]["code"] == "DEGENERATE_PROFILE"

    def test_rational_circle_refused(self, capsys):
        code, doc = run_cli(
            capsys, "analyze", "--p2-rational", "2*s", "1+s^2", "1-s^2", "1+s^2"
        )
        assert code == 3
        assert doc["error"]["code"] == "NOT_POLYNOMIAL_CURVE"

    def test_parse_error_exit_2(self, capsys):
        code, doc = run_cli(capsys, "analyze", "--implicit", "x^-1")
        assert code == 2
        assert doc["error"]["code"] == "INVALID_INPUT"


class TestQuadricCmd:
    def test_ellipsoid(self, capsys):
        code, doc = run_cli(capsys, "quadric", "--implicit", "4*x^2+y^2+z^2-1")
        assert code == 0
        assert doc["class"] == "ellipsoid"
        assert doc["polynomial_over_C"] is True
        assert doc["polynomial_over_R"] == "no"
        assert doc["verification"]["on_surface"] is True

    def test_elliptic_cylinder_no_witness(self, capsys):
        code, doc = run_cli(capsys, "quadric", "--implicit", "x^2+y^2-1")
        assert code == 0
        assert doc["class"] == "elliptic-cylinder"
        assert doc["witness"] is None

    def test_reducible_unsupported(self, capsys):
        code, doc = run_cli(capsys, "quadric", "--implicit", "x^2-y^2")
        assert code == 3
        assert doc["error"]["code"] == "UNSUPPORTED"


class TestMeshCmd:
    def test_inline_param(self, capsys, tmp_path):
        out = tmp_path / "p.obj"
        code, doc = run_cli(
            capsys, "mesh", "--param", "u", "v", "u^2+v^2", "--grid", "8", "--out", str(out)
        )
        assert code == 0
        assert doc["mesh"]["vertices"] == 64 and doc["mesh"]["faces"] == 49
        assert out.exists()

    def test_real_witness_from_report(self, capsys, tmp_path):
        code, report = run_cli(capsys, "analyze", "--implicit", "x^2+y^2-z^2+1")
        assert code == 0
        rpath = tmp_path / "report.json"
        rpath.write_text(json.dumps(report))
        out = tmp_path / "h.obj"
        code, doc = run_cli(
            capsys, "mesh", "--report", str(rpath), "--witness", "real",
            "--grid", "6", "--u-min", "0", "--u-max", "1", "--v-min", "0", "--v-max", "1",
            "--out", str(out),
        )
        assert code == 0
        assert doc["mesh"]["vertices"] == 36

    def test_complex_witness_refused(self, capsys, tmp_path):
        code, report = run_cli(capsys, "analyze", "--implicit", "x^2+y^2+z^2-1")
        rpath = tmp_path / "report.json"
        rpath.write_text(json.dumps(report))
        code, doc = run_cli(
            capsys, "mesh", "--report", str(rpath), "--witness", "complex",
            "--out", str(tmp_path / "s.obj"),
        )
        assert code == 3
        assert doc["error"]["code"] == "NO_REAL_EMBEDDING"

    def test_quadric_witness_meshable(self, capsys, tmp_path):
        code, report = run_cli(capsys, "quadric", "--implicit", "x^2+y^2-z^2-1")
        assert code == 0
        rpath = tmp_path / "quadric.json"
        rpath.write_text(json.dumps(report))
        out = tmp_path / "q.obj"
        code, doc = run_cli(
            capsys, "mesh", "--report", str(rpath), "--witness", "quadric",
            "--grid", "5", "--out", str(out),
        )
        assert code == 0
        assert doc["mesh"]["vertices"] == 25 and out.exists()

    def test_missing_report_is_user_error(self, capsys, tmp_path):
        code, doc = run_cli(
            capsys, "mesh", "--report", str(tmp_path / "nope.json"),
            "--out", str(tmp_path / "x.obj"),
        )
        assert code == 2 and doc["error"]["code"] == "INVALID_INPUT"

    def test_report_without_real_witness(self, capsys, tmp_path):
        code, report = run_cli(capsys, "analyze", "--implicit", "x^2+y^2+z^2-1")
        rpath = tmp_path / "report.json"
        rpath.write_text(json.dumps(report))
        code, doc = run_cli(
            capsys, "mesh", "--report", str(rpath), "--witness", "real",
            "--out", str(tmp_path / "x.obj"),
        )
        assert code == 2  # the sphere report has no real witness to sample


class TestP2Cmd:
    def test_decompose(self, capsys):
        code, doc = run_cli(capsys, "p2", "decompose", "--x", "t^3", "--z", "t")
        assert code == 0
        d = doc["p2_decomposition"]
        assert d["p"]["pretty"] == "t" and d["a"]["pretty"] == "t" and d["delta"] == 1

    def test_polynomialize(self, capsys):
        code, doc = run_cli(
            capsys, "p2", "polynomialize",
            "--x-num", "1", "--x-den", "s", "--z-num", "1", "--z-den", "s^2",
        )
        assert code == 0
        d = doc["polynomial_parametrization"]
        assert d["x"]["pretty"] == "t" and d["z"]["pretty"] == "t^2"

    def test_equiv_found(self, capsys):
        code, doc = run_cli(
            capsys, "p2", "equiv", "--first", "t", "t^2", "--second", "2*s+1", "4*s^2+4*s+1"
        )
        assert code == 0
        assert doc["equivalent"] is True and doc["scale"] == "2" and doc["shift"] == "1"

    def test_equiv_not_found(self, capsys):
        code, doc = run_cli(capsys, "p2", "equiv", "--first", "t", "t^2", "--second", "s", "s^3")
        assert code == 0
        assert doc["equivalent"] is False


class TestCatalogCmd:
    def test_all_pass(self, capsys):
        code = main(["verify-catalog"])
        captured = capsys.readouterr()
        doc = json.loads(captured.out)
        assert code == 0
        assert doc["all_passed"] is True
        assert len(doc["catalog"]) >= 14
        assert captured.err.count("PASS") == len(doc["catalog"])


class TestReportRoundTrip:
    def test_witness_polynomials_reparse_identically(self, capsys):
        from revolutio.jsonio import json_to_param
        from revolutio import PlaneCurveParam, UniPoly, decompose_paa, sor_complex_param

        code, doc = run_cli(capsys, "analyze", "--implicit", "x^2+y^2+z^2-1")
        got = json_to_param(doc["complex_parametrization"])
        t = UniPoly.variable("t")
        expected = sor_complex_param(decompose_paa(PlaneCurveParam.polynomial(1 - t ** 2, t)))
        assert got.components == expected.components
        assert got.tower == expected.tower


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "revolutio", "analyze", "--implicit", "x^2+y^2-z"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["real_verdict"]["status"] == "real-proper"
