import io
import json
import subprocess
import sys

import pytest

from gbwalk.cli import main, parse_problem, parse_rational_vector
from gbwalk.errors import ParseError

CUSP = """\
# two plane curves
vars: x, y
from: degrevlex
to: lex
x^2 - y^3
x^3 - y^2 - x
"""

FINAL = ["x - y^7 + y^4 + y^2", "y^9 - 2*y^6 - y^4 + y^3"]


def run(tmp_path, argv, text=None, name="problem.txt"):
    if text is not None:
        (tmp_path / name).write_text(text)
    out, err = io.StringIO(), io.StringIO()
    code = main([a.replace("@", str(tmp_path) + "/") for a in argv], out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def basis_lines(stdout):
    return [l for l in stdout.splitlines() if l and not l.startswith(("#", "vars:", "order:"))]


# --- problem files --------------------------------------------------------------------

def test_parse_problem():
    p = parse_problem(CUSP)
    assert p.names == ("x", "y")
    assert p.orders == {"from": "degrevlex", "to": "lex"}
    assert [line for _, _, line in p.generators] == [5, 6]


@pytest.mark.parametrize(
    "text,line,column",
    [
        ("vars: x, y\nx + $\n", 2, 5),
        ("vars: x, y\n\nx^2\nx + z\n", 4, 5),
        ("x + y\n", 1, None),
        ("vars: x, x\nx\n", 1, None),
        ("vars: x, y\nx - x\n", 2, None),
    ],
)
def test_parse_errors_report_positions(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_problem(text)
    assert info.value.line == line
    assert info.value.column == column


def test_rational_vectors():
    assert parse_rational_vector("1/2, 3", 2) == (0.5, 3)
    with pytest.raises(ParseError):
        parse_rational_vector("1,2,3", 2)
    with pytest.raises(ParseError):
        parse_rational_vector("1/0,2", 2)


# --- gb ---------------------------------------------------------------------------------

def test_gb(tmp_path):
    code, out, err = run(tmp_path, ["gb", "@problem.txt", "--order", "lex"], CUSP)
    assert code == 0 and err == ""
    assert basis_lines(out) == FINAL
    assert out.splitlines()[:2] == ["vars: x, y", "order: lex"]


def test_gb_degree_first(tmp_path):
    code, out, _ = run(tmp_path, ["gb", "@problem.txt", "--order", "lex", "--degree-first"], CUSP)
    assert code == 0 and basis_lines(out) == FINAL


def test_gb_output_is_a_fixed_point(tmp_path):
    _, out, _ = run(tmp_path, ["gb", "@problem.txt", "--order", "degrevlex"], CUSP)
    code, again, _ = run(tmp_path, ["gb", "@again.txt"], out, name="again.txt")
    assert code == 0 and again == out


def test_gb_is_deterministic(tmp_path):
    outs = {run(tmp_path, ["gb", "@problem.txt", "--order", "matrix[[1,2],[0,1]]"], CUSP)[1] for _ in range(3)}
    assert len(outs) == 1


def test_gb_errors(tmp_path):
    code, out, err = run(tmp_path, ["gb", "@problem.txt"], "vars: x, y\n")
    assert code == 2 and out == "" and "no nonzero generators" in err
    code, _, err = run(tmp_path, ["gb", "@problem.txt"], "vars: x, y\nx - x\n")
    assert code == 2 and "line 2" in err and "zero" in err
    code, _, err = run(tmp_path, ["gb", "@problem.txt"], "vars: x, y\nx^2 + [y\n")
    assert code == 2 and "line 2, column 9" in err
    code, _, err = run(tmp_path, ["gb", "@problem.txt", "--order", "lex"], "vars: x, y, z\nx\n")
    assert code == 0
    code, _, err = run(tmp_path, ["gb", "@problem.txt", "--order", "matrix[[1,0]]"], "vars: x, y\nx\n")
    assert code == 2 and "not a term order" in err  # one row cannot break ties
    code, _, err = run(tmp_path, ["gb", "@problem.txt", "--order", "matrix[[1,0,0]]"], "vars: x, y\nx\n")
    assert code == 2 and "entries" in err
    code, _, err = run(tmp_path, ["gb", "@missing.txt"])
    assert code == 2 and "missing.txt" in err


def test_step_cap_exit_code(tmp_path):
    text = "vars: t, x\n1 - t\nx\n"
    code, _, err = run(
        tmp_path, ["gb", "@problem.txt", "--order", "knapsack-source", "--group-order", "--step-cap", "100"], text
    )
    assert code == 3 and "step cap" in err
    code, _, err = run(tmp_path, ["gb", "@problem.txt", "--order", "knapsack-source"], text)
    assert code == 2 and "not a term order" in err


# --- walks ------------------------------------------------------------------------------

def test_walk_with_trace(tmp_path):
    code, out, _ = run(tmp_path, ["walk", "@problem.txt", "--trace"], CUSP)
    assert code == 0
    assert out.splitlines()[0] == "# trace: (-2,3) (-1,4) (-1,7)"
    assert basis_lines(out) == FINAL


def test_walk_to_the_same_order(tmp_path):
    code, out, _ = run(tmp_path, ["walk", "@problem.txt", "--to", "degrevlex", "--trace"], CUSP)
    assert code == 0
    assert out.splitlines()[0] == "# trace:"
    assert basis_lines(out) == ["x^3 - y^2 - x", "y^3 - x^2"]


def test_walk_json(tmp_path):
    code, out, _ = run(tmp_path, ["walk", "@problem.txt", "--json"], CUSP)
    doc = json.loads(out)
    assert doc["basis"] == FINAL
    assert [s["facet"] for s in doc["trace"]["steps"]] == [[-2, 3], [-1, 4], [-1, 7]]


def test_walk_rejects_bad_markings(tmp_path):
    text = "vars: x, y\n[x^2] - y^3\nx^3 - y^2 - x\n"
    code, out, err = run(tmp_path, ["walk", "@problem.txt"], text)
    assert code == 2 and out == ""
    assert "offending member: [x^2] - y^3" in err


def test_walk_names_failing_s_pair(tmp_path):
    text = "vars: x, y\nx*y - 1\nx^2 - y\n"
    code, _, err = run(tmp_path, ["walk", "@problem.txt"], text)
    assert code == 2 and "S-pair" in err and err.count("offending member") == 2
    code, out, _ = run(tmp_path, ["walk", "@problem.txt", "--start-gb"], text)
    assert code == 0 and basis_lines(out) == ["x - y^2", "y^3 - 1"]


def test_walk_truncated(tmp_path):
    code, out, _ = run(tmp_path, ["walk", "@problem.txt", "--truncate", "1,1"], CUSP)
    assert code == 0 and basis_lines(out) == FINAL
    code, _, err = run(tmp_path, ["walk", "@problem.txt", "--truncate", "1"], CUSP)
    assert code == 2 and "p,q" in err
    code, _, err = run(tmp_path, ["walk", "@problem.txt", "--truncate", "3,1"], CUSP)
    assert code == 2 and "out of range" in err


def test_walk_classic(tmp_path):
    code, out, _ = run(tmp_path, ["walk-classic", "@problem.txt", "--w0", "1,1", "--t0", "9,1"], CUSP)
    assert code == 0 and basis_lines(out) == FINAL
    code, out, _ = run(tmp_path, ["walk-classic", "@problem.txt", "--w0", "1/2,1/2", "--t0", "7,1"], CUSP)
    assert code == 0 and basis_lines(out) == FINAL
    code, _, err = run(tmp_path, ["walk-classic", "@problem.txt", "--w0", "3,1", "--t0", "9,1"], CUSP)
    assert code == 2 and "not in the cone" in err


def test_marked_output_round_trips_through_walk(tmp_path):
    _, out, _ = run(tmp_path, ["gb", "@problem.txt", "--order", "degrevlex", "--mark"], CUSP)
    assert "[" in out
    code, out2, _ = run(tmp_path, ["walk", "@again.txt", "--from", "degrevlex"], out, name="again.txt")
    assert code == 0 and basis_lines(out2) == FINAL


# --- knapsack ---------------------------------------------------------------------------

def test_knapsack(tmp_path):
    (tmp_path / "inst.txt").write_text("2 3\n")
    (tmp_path / "q.txt").write_text("7\n# comment\n1\n")
    code, out, _ = run(tmp_path, ["knapsack", "@inst.txt", "@q.txt", "--stats"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("|Gsigma|=2 |Gtau|=")
    assert lines[-2].startswith("FEASIBLE ")
    x1, x2 = map(int, lines[-2].split()[1:])
    assert 2 * x1 + 3 * x2 == 7
    assert lines[-1] == "INFEASIBLE 1"
    assert "vars: t, x1, x2" in lines


def test_knapsack_infeasible_and_json(tmp_path):
    (tmp_path / "inst.txt").write_text("2 4\n")
    code, out, _ = run(tmp_path, ["knapsack", "@inst.txt", "-b", "3", "--no-basis"])
    assert code == 0 and out.startswith("INFEASIBLE ")
    code, out, _ = run(tmp_path, ["knapsack", "@inst.txt", "--all", "--json"])
    doc = json.loads(out)
    assert len(doc["queries"]) == 41
    assert [q["feasible"] for q in doc["queries"]] == [b % 2 == 0 for b in range(41)]


def test_knapsack_errors(tmp_path):
    (tmp_path / "inst.txt").write_text("2 0\n")
    code, _, err = run(tmp_path, ["knapsack", "@inst.txt"])
    assert code == 2 and "positive" in err
    (tmp_path / "inst.txt").write_text("2 3\n")
    (tmp_path / "q.txt").write_text("seven\n")
    code, _, err = run(tmp_path, ["knapsack", "@inst.txt", "@q.txt"])
    assert code == 2 and "line 1" in err
    code, _, err = run(tmp_path, ["knapsack", "@inst.txt", "-b", "-4"])
    assert code == 2


# --- the installed entry points -----------------------------------------------------------

def test_module_entry_point(tmp_path):
    (tmp_path / "p.txt").write_text(CUSP)
    proc = subprocess.run(
        [sys.executable, "-m", "gbwalk", "walk", str(tmp_path / "p.txt")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert basis_lines(proc.stdout) == FINAL
    proc = subprocess.run(
        [sys.executable, "-m", "gbwalk", "gb", str(tmp_path / "nope.txt")], capture_output=True, text=True
    )
    assert proc.returncode == 2 and proc.stdout == "" and proc.stderr
