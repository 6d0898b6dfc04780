import io
import math

import pytest

from lacurve.cli import (EXIT_EXPECTATION, EXIT_NUMERIC, EXIT_OK,
                         EXIT_VALIDATION, EXIT_VERIFICATION, main)
from lacurve.export import read_csv


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSample:
    def test_csv_to_stdout(self, capsys):
        code, out, _ = run(capsys, "sample", "--alpha", "1",
                           "--theta-from", "0", "--theta-to", "1", "--n", "5")
        assert code == EXIT_OK
        poly = read_csv(io.StringIO(out))
        assert len(poly.params) == 5
        assert poly.params[0] == 0.0 and poly.params[-1] == 1.0

    def test_clipping_warns_but_succeeds(self, capsys):
        code, out, err = run(capsys, "sample", "--alpha", "2",
                             "--theta-from", "-5", "--theta-to", "1",
                             "--n", "10")
        assert code == EXIT_OK
        assert "clipped" in err
        poly = read_csv(io.StringIO(out))
        assert poly.params[0] > -1.0

    def test_fully_out_of_domain_rejected(self, capsys):
        code, _, err = run(capsys, "sample", "--alpha", "-1",
                           "--theta-from", "1", "--theta-to", "2")
        assert code == EXIT_VALIDATION
        assert "error" in err

    def test_infinite_alpha_circle(self, capsys):
        code, out, _ = run(capsys, "sample", "--alpha", "inf",
                           "--theta-from", "0", "--theta-to", "6.28",
                           "--n", "20")
        assert code == EXIT_OK
        poly = read_csv(io.StringIO(out))
        for _, (x, y) in zip(poly.params, poly.points):
            assert math.hypot(x, y - 1.0) == pytest.approx(1.0, abs=1e-9)

    def test_bad_alpha(self, capsys):
        code, _, err = run(capsys, "sample", "--alpha", "banana")
        assert code == EXIT_VALIDATION

    def test_negative_lambda(self, capsys):
        code, _, _ = run(capsys, "sample", "--alpha", "1", "--lambda", "-1")
        assert code == EXIT_VALIDATION

    def test_svg_output(self, capsys):
        code, out, _ = run(capsys, "sample", "--alpha", "1",
                           "--theta-from", "0", "--theta-to", "2",
                           "--n", "20", "--format", "svg")
        assert code == EXIT_OK
        assert out.startswith('<?xml') and "</svg>" in out

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "c.csv"
        code, out, _ = run(capsys, "sample", "--alpha", "0",
                           "--theta-from", "-1", "--theta-to", "0.5",
                           "--n", "8", "--output", str(path))
        assert code == EXIT_OK and out == ""
        assert len(read_csv(str(path)).params) == 8


class TestIsoptic:
    def test_verify_path(self, capsys, tmp_path):
        code, _, err = run(capsys, "isoptic", "--alpha", "1",
                           "--delta", "1.0", "--theta-from", "-1",
                           "--theta-to", "1", "--n", "10", "--verify",
                           "--output", str(tmp_path / "iso.csv"))
        assert code == EXIT_OK
        assert "verified 10 isoptic points" in err

    def test_out_of_range_rejected_not_clipped(self, capsys):
        # theta-to + delta would leave the curve domain
        code, _, err = run(capsys, "isoptic", "--alpha", "-1",
                           "--delta", "2.0944", "--theta-from", "-3",
                           "--theta-to", "0.4", "--n", "5")
        assert code == EXIT_VALIDATION
        assert "isoptic domain" in err

    def test_degenerate_delta(self, capsys):
        code, _, _ = run(capsys, "isoptic", "--alpha", "1",
                         "--delta", "3.2", "--theta-from", "0",
                         "--theta-to", "1", "--n", "5")
        assert code == EXIT_VALIDATION

    def test_degrees_flag(self, capsys, tmp_path):
        code, _, _ = run(capsys, "isoptic", "--alpha", "1",
                         "--delta", "120", "--degrees",
                         "--theta-from", "0", "--theta-to", "1",
                         "--n", "5", "--output", str(tmp_path / "i.csv"))
        assert code == EXIT_OK

    def test_multi_polyline_csv_needs_output(self, capsys):
        code, _, err = run(capsys, "isoptic", "--alpha", "1",
                           "--delta", "1.0", "--theta-from", "0",
                           "--theta-to", "1", "--n", "5")
        assert code == EXIT_VALIDATION
        assert "--output" in err


class TestLcg:
    def test_base_trace_is_line(self, capsys):
        code, out, _ = run(capsys, "lcg", "--alpha", "2",
                           "--theta-from", "0", "--theta-to", "3", "--n", "10")
        assert code == EXIT_OK
        poly = read_csv(io.StringIO(out))
        slopes = {(y2 - y1) / (x2 - x1)
                  for (x1, y1), (x2, y2) in zip(poly.points, poly.points[1:])}
        for s in slopes:
            assert s == pytest.approx(2.0, abs=1e-9)

    def test_circle_has_no_lcg(self, capsys):
        code, _, err = run(capsys, "lcg", "--alpha", "inf")
        assert code == EXIT_NUMERIC

    def test_evolute_target(self, capsys):
        code, out, _ = run(capsys, "lcg", "--alpha", "3", "--target",
                           "evolute", "--theta-from", "0.1", "--theta-to",
                           "1.5", "--n", "6")
        assert code == EXIT_OK
        poly = read_csv(io.StringIO(out))
        (x1, y1), (x2, y2) = poly.points[0], poly.points[-1]
        assert (y2 - y1) / (x2 - x1) == pytest.approx(-1.0, abs=1e-9)

    def test_isoptic_target(self, capsys):
        code, out, _ = run(capsys, "lcg", "--alpha", "1", "--target",
                           "isoptic", "--delta", "1.0",
                           "--theta-from", "-1", "--theta-to", "1", "--n", "5")
        assert code == EXIT_OK
        poly = read_csv(io.StringIO(out))
        (x1, y1), (x2, y2) = poly.points[0], poly.points[-1]
        assert (y2 - y1) / (x2 - x1) == pytest.approx(1.0, abs=1e-8)


class TestCheck:
    def test_autoisoptic_expected(self, capsys):
        code, out, _ = run(capsys, "check", "autoisoptic", "--alpha", "1",
                           "--expect", "autoisoptic")
        assert code == EXIT_OK
        assert "verdict autoisoptic" in out

    def test_expectation_mismatch(self, capsys):
        code, out, err = run(capsys, "check", "autoisoptic", "--alpha", "2",
                             "--thetas", "0,3.14159",
                             "--expect", "autoisoptic")
        assert code == EXIT_EXPECTATION
        assert "verdict not_autoisoptic" in out

    def test_autoevolute(self, capsys):
        code, out, _ = run(capsys, "check", "autoevolute", "--alpha", "3",
                           "--phi", "0.3")
        assert code == EXIT_OK
        assert "target_slope -1.0" in out

    def test_autoevolute_singular(self, capsys):
        code, _, _ = run(capsys, "check", "autoevolute", "--alpha", "2")
        assert code == EXIT_NUMERIC


class TestDeterminism:
    def test_repeat_invocations_identical(self, capsys):
        argv = ["sample", "--alpha", "-1", "--theta-from", "-2",
                "--theta-to", "0.3", "--n", "40"]
        _, out1, _ = run(capsys, *argv)
        _, out2, _ = run(capsys, *argv)
        assert out1 == out2 and out1

    def test_report_deterministic(self, capsys):
        argv = ["check", "autoisoptic", "--alpha", "2", "--thetas", "0,3.14"]
        c1, out1, _ = run(capsys, *argv)
        c2, out2, _ = run(capsys, *argv)
        assert c1 == c2 == EXIT_OK
        assert out1 == out2
