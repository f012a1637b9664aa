import json
import math
import re

import numpy as np
import pytest

from convexsupport import FourierSupport, analyze, random_convex
from convexsupport.cli import main
from convexsupport.curvefile import parse_curve, read_curve, serialize_curve, write_curve
from convexsupport.errors import CurveParseError, InvalidArgumentError
from convexsupport.render import RenderSpec, render_svg
from convexsupport.report import report_dict, report_json

from .conftest import random_series


class TestCurveFile:
    def test_parse_examples(self):
        assert parse_curve("a0 5\nh 2 0 1\n") == FourierSupport(5, ((2, 0, 1),))
        assert parse_curve("a0 8\nh 3 0 1\n") == FourierSupport(8, ((3, 0, 1),))

    def test_comments_and_blank_lines(self):
        text = "# figure curve\n\na0 5   # constant\n  h 2 0 1\n"
        assert parse_curve(text) == FourierSupport(5, ((2, 0, 1),))

    @pytest.mark.parametrize("text, lineno", [
        ("a0 1\nh 2 0 1\nh 2 1 0\n", 3),
        ("a0 1\nq 2\n", 2),
        ("a0 1\nh 2 0\n", 2),
        ("a0 nan\n", 1),
        ("a0 1\nh 2 inf 0\n", 2),
        ("a0 1\nh x 0 0\n", 2),
        ("a0 1\nh 0 1 1\n", 2),
        ("a0 1\na0 2\n", 2),
        ("a0 one\n", 1),
    ])
    def test_errors_carry_line_numbers(self, text, lineno):
        with pytest.raises(CurveParseError) as info:
            parse_curve(text)
        assert info.value.lineno == lineno

    def test_missing_a0(self):
        with pytest.raises(CurveParseError):
            parse_curve("h 2 0 1\n")

    def test_round_trip_random(self):
        rng = np.random.default_rng(0)
        for k in range(100):
            p = random_series(rng, k % 12, scale=10 ** rng.uniform(-8, 3))
            assert parse_curve(serialize_curve(p)) == p

    def test_round_trip_awkward_values(self):
        p = FourierSupport(0.1 + 0.2, ((1, -0.0, 1e-310), (7, 1 / 3, -2.5e200)))
        assert parse_curve(serialize_curve(p, ["note"])) == p

    def test_file_helpers(self, tmp_path):
        p = FourierSupport(2.0, ((3, 0.25, 0.0),))
        path = tmp_path / "c.curve"
        write_curve(path, p, ["hello"])
        assert path.read_text().startswith("# hello\n")
        assert read_curve(path) == p


class TestReportJson:
    def test_circle(self):
        data = json.loads(report_json(analyze(FourierSupport(1.0))))
        assert data["delta"] == 0
        assert data["classification"] == "circle"

    def test_equality_case_exact(self, astroid5):
        text = report_json(analyze(astroid5))
        data = json.loads(text)
        assert re.search(r'"lower_general": ([^,\n]+)', text).group(1) == re.search(r'"delta": ([^,\n]+)', text).group(1)
        assert data["bounds"]["lower_general"] == data["delta"]
        assert data["slacks"]["lower_general"] == 0

    def test_key_order_and_digits(self, deltoid8):
        text = report_json(analyze(deltoid8))
        data = json.loads(text)
        assert list(data) == ["L", "F", "A", "F_e", "delta", "delta2_sq", "bounds", "slacks",
                              "constant_width", "classification", "residual", "min_curvature"]
        assert data["constant_width"] is True
        # %.17g drops trailing zeros but keeps every significant digit
        assert '"L": 50.26548245743669,' in text
        # every float round-trips
        assert data["delta"] == analyze(deltoid8).delta

    def test_byte_stable(self):
        p = random_convex(7, 3, 0.05)
        assert report_json(analyze(p)) == report_json(analyze(p))

    def test_dict_matches_report(self, astroid5):
        r = analyze(astroid5)
        d = report_dict(r)
        assert d["bounds"] == r.bounds and d["A"] == r.A


def _layers(svg):
    return re.findall(r'<g id="layer-(\w+)"', svg)


class TestRender:
    def test_default_layers(self, astroid5):
        svg = render_svg(astroid5)
        assert svg.startswith('<?xml')
        assert _layers(svg) == ["boundary", "parallel", "evolute"]
        assert svg.count("<polygon") == 3

    def test_polygon_sample_count(self, deltoid8):
        svg = render_svg(deltoid8, RenderSpec(layers=("boundary",), samples_per_curve=64))
        points = re.search(r'points="([^"]+)"', svg).group(1).split()
        assert len(points) == 64

    def test_y_axis_flipped(self, astroid5):
        svg = render_svg(FourierSupport(1.0, ((1, 0.0, 5.0),)), RenderSpec(layers=("boundary",), samples_per_curve=16))
        # circle centred at (0, 5) is drawn around y = -5
        ys = [float(p.split(",")[1]) for p in re.search(r'points="([^"]+)"', svg).group(1).split()]
        assert max(ys) < 0

    def test_viewbox_padding(self):
        svg = render_svg(FourierSupport(2.0), RenderSpec(layers=("boundary",)))
        x, y, w, h = map(float, re.search(r'viewBox="([^"]+)"', svg).group(1).split())
        assert (x, y, w, h) == pytest.approx((-2.2, -2.2, 4.4, 4.4), abs=1e-6)

    def test_degenerate_layer_is_dot(self):
        svg = render_svg(FourierSupport(2.0), RenderSpec(layers=("boundary", "evolute")))
        assert svg.count("<circle") == 1
        assert svg.count("<polygon") == 1

    def test_numeric_parallel_and_pedal(self, astroid5):
        svg = render_svg(astroid5, RenderSpec(layers=("pedal", "parallel"), parallel_distance=2.0))
        assert _layers(svg) == ["pedal", "parallel"]

    def test_deterministic(self, deltoid8):
        assert render_svg(deltoid8) == render_svg(deltoid8)

    @pytest.mark.parametrize("kwargs", [
        dict(layers=()), dict(layers=("shadow",)), dict(samples_per_curve=8), dict(parallel_distance="half"),
    ])
    def test_invalid_spec(self, kwargs):
        with pytest.raises(InvalidArgumentError):
            RenderSpec(**kwargs)


@pytest.fixture
def curve_files(tmp_path):
    files = {
        "astroid5": "# p = 5 + sin 2phi\na0 5\nh 2 0 1\n",
        "deltoid8": "a0 8\nh 3 0 1\n",
        "nonconvex": "a0 1\nh 2 1 0\n",
        "broken": "a0 1\nh 2 1\n",
        "generic": "a0 3\nh 2 0.1 0\nh 5 0 0.01\n",
    }
    paths = {}
    for name, text in files.items():
        paths[name] = tmp_path / f"{name}.curve"
        paths[name].write_text(text)
    return paths


class TestCli:
    def test_report_json(self, curve_files, capsys):
        assert main(["report", str(curve_files["astroid5"]), "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        for name in ("lower_general", "lower_groemer", "upper_hurwitz"):
            assert data["slacks"][name] == 0
        assert data["classification"] == "astroid_parallel"

    def test_report_matches_library(self, curve_files, capsys):
        assert main(["report", str(curve_files["generic"]), "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        r = analyze(read_curve(curve_files["generic"]))
        assert data == json.loads(report_json(r))
        assert data["delta"] == r.delta and data["slacks"] == r.slacks

    def test_report_text(self, curve_files, capsys):
        assert main(["report", str(curve_files["generic"])]) == 0
        assert "lower_general" in capsys.readouterr().out

    def test_report_byte_stable(self, curve_files, capsys):
        main(["report", str(curve_files["generic"]), "--json"])
        first = capsys.readouterr().out
        main(["report", str(curve_files["generic"]), "--json"])
        assert capsys.readouterr().out == first

    def test_degenerate_needs_flag(self, curve_files, capsys):
        assert main(["report", str(curve_files["deltoid8"])]) == 3
        assert main(["report", str(curve_files["deltoid8"]), "--allow-degenerate", "--json"]) == 0
        assert json.loads(capsys.readouterr().out)["constant_width"] is True

    def test_check_nonconvex(self, curve_files, capsys):
        assert main(["check", str(curve_files["nonconvex"])]) == 3
        out = capsys.readouterr().out
        value = float(re.search(r"min p\+p''\s+(\S+)", out).group(1))
        assert value == pytest.approx(-2.0, abs=1e-12)

    def test_check_convex(self, curve_files, capsys):
        assert main(["check", str(curve_files["astroid5"])]) == 0
        assert "convex            yes" in capsys.readouterr().out
        assert main(["check", str(curve_files["deltoid8"])]) == 3
        assert main(["check", str(curve_files["deltoid8"]), "--allow-degenerate"]) == 0

    def test_parse_error(self, curve_files, capsys):
        assert main(["report", str(curve_files["broken"])]) == 2
        assert "line 2" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        assert main(["check", str(tmp_path / "nope.curve")]) == 5

    def test_bad_arguments(self):
        assert main([]) == 5
        assert main(["frobnicate"]) == 5
        assert main(["sweep", "--count", "x", "--degree", "3", "--seed", "1"]) == 5
        assert main(["sweep", "--count", "0", "--degree", "3", "--seed", "1"]) == 5

    def test_sweep(self, capsys):
        assert main(["sweep", "--count", "100", "--degree", "6", "--seed", "7"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("sweep count=100 violations=0 min_slack:")

    def test_sweep_constant_width(self, capsys):
        assert main(["sweep", "--count", "20", "--degree", "7", "--seed", "1", "--constant-width",
                     "--min-radius", "0.1", "--tol", "1e-10"]) == 0
        assert "lower_cw=" in capsys.readouterr().out

    def test_sweep_violation_exit_code(self, monkeypatch):
        import convexsupport.cli as cli
        from convexsupport.inequalities import SweepSummary, Violation

        def fake(*args, **kwargs):
            return SweepSummary(1, [Violation(1, "lower_general", -1.0)], {"lower_general": -1.0}, None, None, math.nan)

        monkeypatch.setattr(cli, "sweep", fake)
        assert main(["sweep", "--count", "1", "--degree", "2", "--seed", "0"]) == 4

    def test_render(self, curve_files, tmp_path, capsys):
        out = tmp_path / "fig.svg"
        assert main(["render", str(curve_files["astroid5"]), "--out", str(out)]) == 0
        assert _layers(out.read_text()) == ["boundary", "parallel", "evolute"]
        assert main(["render", str(curve_files["deltoid8"]), "--out", str(out),
                     "--layers", "boundary", "pedal", "--parallel", "3", "--samples", "100"]) == 0
        assert _layers(out.read_text()) == ["boundary", "pedal"]

    def test_render_bad_layers(self, curve_files, tmp_path):
        out = tmp_path / "fig.svg"
        assert main(["render", str(curve_files["astroid5"]), "--out", str(out), "--layers", "halo"]) == 5
        assert main(["render", str(curve_files["astroid5"]), "--out", str(out), "--samples", "4"]) == 5
        assert main(["render", str(curve_files["astroid5"]), "--out", str(out), "--parallel", "abc"]) == 5

    def test_canon(self, curve_files, capsys):
        assert main(["canon", str(curve_files["astroid5"])]) == 0
        out = capsys.readouterr().out
        assert float(re.search(r"^phi0\s+(\S+)", out, re.M).group(1)) == pytest.approx(math.pi / 4)
        assert float(re.search(r"^amplitude\s+(\S+)", out, re.M).group(1)) == 1.0
        assert main(["canon", str(curve_files["generic"])]) == 5
