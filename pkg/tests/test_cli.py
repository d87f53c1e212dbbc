import io
import json
import math

import numpy as np
import pytest

from angelesco.cli import build_parser, main


def run_cli(argv):
    import contextlib

    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = main(argv)
    return code, out.getvalue()


def test_coeffs_base_csv():
    code, out = run_cli(
        ["coeffs", "--r", "2", "--alpha", "0", "--beta", "0", "--n", "2", "--family", "base"]
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "k,re,im"
    rows = [line.split(",") for line in lines[1:]]
    assert [int(r[0]) for r in rows] == [0, 1, 2]
    vals = [float(r[1]) for r in rows]
    assert vals == pytest.approx([1.0, -3.75, 3.0])
    assert all(float(r[2]) == 0.0 for r in rows)


def test_coeffs_diag_two_rays():
    code, out = run_cli(["coeffs", "--r", "2", "--n", "1", "--family", "diag"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "ray,k,re,im"
    assert len(lines) == 3  # one coefficient per ray
    rays = {line.split(",")[0] for line in lines[1:]}
    assert rays == {"1", "2"}


def test_invalid_alpha_exits_2():
    code, _ = run_cli(["coeffs", "--r", "2", "--alpha", "-1", "--beta", "0", "--n", "1"])
    assert code == 2


def test_family_k_validation():
    code, _ = run_cli(["coeffs", "--r", "2", "--n", "1", "--family", "up"])
    assert code == 2
    code, _ = run_cli(["coeffs", "--r", "2", "--n", "1", "--family", "up", "--k", "3"])
    assert code == 2
    code, _ = run_cli(["coeffs", "--r", "2", "--n", "1", "--family", "base", "--k", "1"])
    assert code == 2


def test_degree_cap_exits_3():
    code, _ = run_cli(["coeffs", "--r", "2", "--n", "99", "--family", "base"])
    assert code == 3


def test_verify_orthogonality_passes():
    code, out = run_cli(["verify", "--suite", "orthogonality", "--r", "3", "--n-max", "8"])
    assert code == 0
    assert out.strip().splitlines()[-1].endswith("overall=pass")


def test_verify_ode():
    code, _ = run_cli(["verify", "--suite", "ode", "--r", "2", "--n-max", "15", "--tol", "1e-8"])
    assert code == 0


def test_verify_unreachable_tol_fails():
    code, out = run_cli(
        ["verify", "--suite", "orthogonality", "--r", "2", "--n-max", "3", "--tol", "1e-30"]
    )
    assert code == 1
    assert "FAIL" in out


def test_verify_raising_domain_guard():
    code, _ = run_cli(
        ["verify", "--suite", "raising", "--r", "2", "--alpha", "0", "--beta", "0", "--n-max", "3"]
    )
    assert code == 2


def test_zeros_csv_sorted():
    code, out = run_cli(["zeros", "--r", "2", "--n", "5"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "i,x"
    xs = [float(line.split(",")[1]) for line in lines[1:]]
    assert len(xs) == 5
    assert xs == sorted(xs)
    assert all(0.0 < x < 1.0 for x in xs)


def test_recurrence_table_values():
    code, out = run_cli(["recurrence", "--r", "2", "--n-max", "1"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,a,b,a_limit,b_limit"
    row = lines[1].split(",")
    assert float(row[1]) == pytest.approx(1.0 / 12.0)
    assert float(row[2]) == pytest.approx(0.5)


def test_recurrence_r1_usage_error():
    code, _ = run_cli(["recurrence", "--r", "1", "--n-max", "3"])
    assert code == 2


def test_density_interior_midpoint():
    code, out = run_cli(["density", "--r", "1", "--samples", "3"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "x,u,F"
    mid = lines[2].split(",")
    assert float(mid[0]) == pytest.approx(0.5)
    assert float(mid[1]) == pytest.approx(2.0 / math.pi, rel=1e-12)


def test_json_record_schema_and_roundtrip():
    code, out = run_cli(
        ["coeffs", "--r", "2", "--n", "2", "--family", "base", "--format", "json"]
    )
    assert code == 0
    rec = json.loads(out)
    assert rec["schema_version"] == "1"
    assert rec["command"]["n"] == 2
    rows = rec["payload"]["rows"]
    from angelesco import Params, base_poly

    want = base_poly(2, Params(2, 0.0, 0.0)).coeffs
    assert [row[1] for row in rows] == list(want)  # parses back without loss
    assert rec["payload"]["columns"] == ["k", "re", "im"]


def test_byte_identical_runs():
    args = ["density", "--r", "3", "--samples", "25"]
    _, out1 = run_cli(args)
    _, out2 = run_cli(args)
    assert out1 == out2
    args = ["coeffs", "--r", "4", "--alpha", "0.7", "--beta", "-0.5", "--n", "5",
            "--family", "up", "--k", "2"]
    _, out1 = run_cli(args)
    _, out2 = run_cli(args)
    assert out1 == out2


def test_float_round_trip_17g():
    _, out = run_cli(["coeffs", "--r", "3", "--alpha", "0.7", "--beta", "-0.5",
                      "--n", "6", "--family", "base"])
    from angelesco import Params, base_poly

    want = base_poly(6, Params(3, 0.7, -0.5)).coeffs
    got = [float(line.split(",")[1]) for line in out.strip().splitlines()[1:]]
    assert np.array_equal(np.array(got), want)


def test_figure2_csv_and_svg(tmp_path):
    svg = tmp_path / "fig.svg"
    code, out = run_cli(["figure2", "--samples", "151", "--svg", str(svg)])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "r,x,u,F"
    assert len(lines) == 1 + 5 * 151
    rs = {line.split(",")[0] for line in lines[1:]}
    assert rs == {"1", "2", "3", "4", "5"}
    body = svg.read_text()
    assert body.startswith("<svg")
    assert body.count("<polyline") == 5
    assert body.rstrip().endswith("</svg>")


def test_figure2_mass_self_check():
    # trapezoid over the emitted grid plus the exact tail masses from the F
    # column; the endpoint singularities cap what a figure-sized grid can do
    code, out = run_cli(["figure2", "--samples", "2001", "--svg", ""])
    assert code == 0
    lines = out.strip().splitlines()[1:]
    data = {}
    for line in lines:
        r, x, u, F = line.split(",")
        data.setdefault(int(r), []).append((float(x), float(u), float(F)))
    for r, rows in data.items():
        x = np.array([t[0] for t in rows])
        u = np.array([t[1] for t in rows])
        F = np.array([t[2] for t in rows])
        total = np.trapezoid(u, x) + F[0] + (1.0 - F[-1])
        assert abs(total - 1.0) <= 5e-4


def test_parser_structure():
    ap = build_parser()
    assert ap.prog == "angelesco"
    with pytest.raises(SystemExit):
        ap.parse_args(["nonsense"])
