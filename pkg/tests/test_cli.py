"""Golden-file tests for the command line tool.

Set UPDATE_GOLDEN=1 to rewrite tests/golden/ from the current output.
"""

import io
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from smaleflows.cli import main
from smaleflows.documents import dump_flow, parse_document

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"


def d(name):
    return str(DATA / name)


# name, argv, exit code
CASES = [
    ("orbits_lorenz_3", ["orbits", "--max-period", "3"], 0),
    ("orbits_lorenz_1", ["orbits", "--input", d("lorenz_template.json"), "--max-period", "1"], 0),
    ("orbits_counts_7", ["orbits", "--max-period", "7", "--count-only"], 0),
    ("orbits_empty", ["orbits", "--input", d("empty_template.json"), "--max-period", "3"], 1),
    ("link_x_y", ["link", "x", "y"], 0),
    ("link_xy_xxy", ["link", "xy", "xxy"], 0),
    ("link_xy_xy", ["link", "xy", "xy"], 1),
    ("alex_lorenz_q1", ["alex", "--input", d("lorenz_q1_saddle.json")], 0),
    ("alex_lorenz_q1_raw", ["alex", "--input", d("lorenz_q1_saddle.json"), "--raw"], 0),
    ("alex_square_knot", ["alex", "torus(2,3) # torus(2,3)"], 0),
    ("alex_square_knot_doc", ["alex", "--input", d("square_knot.json")], 0),
    ("alex_trefoil_presentation", ["alex", "--input", d("trefoil_presentation.json")], 0),
    ("alex_repeller_p2", ["alex", "--input", d("repeller_p2_presentation.json")], 0),
    ("classify_torus_cable", ["classify", "--input", d("proposal_torus_cable.json")], 0),
    ("classify_both_knotted", ["classify", "--input", d("proposal_both_knotted.json")], 0),
    ("classify_trefoil_meridian", ["classify", "--input", d("proposal_trefoil_meridian.json")], 0),
    ("classify_fixed_points", ["classify", "--input", d("proposal_fixed_points.json")], 0),
    ("compose_sum_trefoils", ["compose", "sum", d("trefoil_flow.json"), d("trefoil_flow.json")], 0),
    ("compose_split_unknots", ["compose", "split", "--input", d("unknot_flow.json"),
                               "--input", d("unknot_flow.json")], 0),
    ("compose_sum_no_disk", ["compose", "sum", d("trefoil_flow.json"), d("trefoil_flow_no_disk.json")], 1),
    ("compose_realize_trefoil", ["compose", "realize", "torus(2,3)"], 0),
    ("franks_lorenz", ["franks", "--input", d("lorenz_q1_saddle.json")], 0),
    ("franks_flow", ["franks", "--input", d("trefoil_flow.json")], 0),
]


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    saved = sys.stderr
    sys.stderr = err
    try:
        code = main(argv, out=out)
    finally:
        sys.stderr = saved
    return code, out.getvalue(), err.getvalue()


def relative(text):
    return text.replace(str(DATA) + os.sep, "")


@pytest.mark.parametrize("name, argv, code", CASES, ids=[c[0] for c in CASES])
def test_golden(name, argv, code):
    got_code, out, err = run(argv)
    assert got_code == code, err
    path = GOLDEN / f"{name}.out"
    text = out if code == 0 else relative(err)
    if os.environ.get("UPDATE_GOLDEN"):
        path.write_text(text, encoding="utf-8")
    assert text == path.read_text(encoding="utf-8")


@pytest.mark.parametrize("name, argv, code", CASES[:6] + CASES[13:18], ids=[c[0] for c in CASES[:6] + CASES[13:18]])
def test_output_is_byte_identical_across_runs(name, argv, code):
    assert run(argv) == run(argv)


def test_spec_values_in_goldens():
    g = lambda n: (GOLDEN / f"{n}.out").read_text()
    assert g("orbits_lorenz_3").split() == ["x", "y", "xy", "xxy", "xyy"]
    assert g("orbits_lorenz_1").split() == ["x", "y"]
    assert g("link_x_y") == "0\n" and g("link_xy_xxy") == "1\n"
    assert g("alex_lorenz_q1") == "1 - t + t^2\n"
    assert g("alex_lorenz_q1_raw") == "-t^-1 + 1 - t\n"
    assert g("alex_square_knot") == "1 - 2*t + 3*t^2 - 2*t^3 + t^4\n"
    assert g("alex_trefoil_presentation") == "1 - t + t^2\n"
    assert g("alex_repeller_p2") == "1 - t^2 + t^4\n"
    assert g("classify_torus_cable").startswith("REALIZABLE Hopf-TorusCable(band=y, p=2, q=3, twist=4)\n")
    assert g("classify_both_knotted") == "UNREALIZABLE other band must be unknotted\n"
    assert g("classify_trefoil_meridian").startswith("REALIZABLE TrefoilMeridian\n")
    assert json.loads(g("compose_sum_trefoils"))["attractor"] == "torus(2,3) # torus(2,3)"
    split = json.loads(g("compose_split_unknots"))
    assert (split["attractor"], split["repeller"], split["lk_ar_abs"]) == ("unknot", "unknot", 1)
    assert "hypothesis (3)" in g("compose_sum_no_disk")


def test_check_alexander_reports_pass():
    code, out, err = run(["compose", "sum", d("trefoil_flow.json"), d("trefoil_flow.json"), "--check-alexander"])
    assert code == 0 and err == "alexander-check: PASS\n"
    code, _, err = run(["compose", "realize", "torus(3,5)", "--check-alexander"])
    assert code == 0 and err == "alexander-check: PASS\n"


@pytest.mark.parametrize("argv, needle", [
    (["classify", "--input", d("bad_json.json")], "bad_json.json:2:"),
    (["classify", "--input", d("missing_field.json")], "$: missing required field 'y_twist'"),
    (["alex", "--input", d("unknown_kind.json")], "$.kind: unknown kind"),
    (["classify", "--input", d("square_knot.json")], "expected proposal"),
    (["alex", "torus(2,4)"], "link, not a knot"),
    (["franks", "--input", d("does_not_exist.json")], "cannot read"),
    (["compose", "sum", d("trefoil_flow.json")], "exactly two"),
])
def test_parse_errors_exit_2(argv, needle):
    code, out, err = run(argv)
    assert code == 2 and out == ""
    assert needle in err


def test_domain_error_mentions_path(tmp_path):
    doc = tmp_path / "s.json"
    doc.write_text('{"kind": "saddle", "structure": [[1, 1], [1, 1]], "det_structure": 3}')
    code, _, err = run(["franks", "--input", str(doc)])
    assert code == 1 and "$.det_structure" in err


def test_argparse_usage_errors_exit_2():
    proc = subprocess.run([sys.executable, "-m", "smaleflows", "orbits"], capture_output=True, text=True)
    assert proc.returncode == 2
    proc = subprocess.run([sys.executable, "-m", "smaleflows", "link", "xz", "x"], capture_output=True, text=True)
    assert proc.returncode == 1


def test_emitted_flows_round_trip():
    for argv in (["compose", "sum", d("trefoil_flow.json"), d("trefoil_flow.json")],
                 ["compose", "realize", "torus(3,7) # named(8_20)"],
                 ["compose", "split", d("trefoil_flow.json"), d("unknot_flow.json")]):
        code, out, _ = run(argv)
        assert code == 0
        assert dump_flow(parse_document(out).value) == out
