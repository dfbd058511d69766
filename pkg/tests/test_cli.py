"""End-to-end tests of the command line against the golden listings."""

import subprocess
import sys

import pytest

from app.main import main
from tests.conftest import ROOT, SAMPLES, golden

COUNTDOWN = str(SAMPLES / "countdown.bc")
COUNTDOWN_ABS = str(SAMPLES / "countdown_abs.bc")


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBytecodeCommands:
    """run, paths, fixpoint and query."""

    def test_run(self, capsys):
        code, out, _ = run_cli(capsys, "run", COUNTDOWN)
        assert code == 0
        assert out == golden("run_countdown.txt")

    def test_paths(self, capsys):
        code, out, _ = run_cli(capsys, "paths", COUNTDOWN_ABS, "--limit", "3")
        assert code == 0
        assert out == golden("paths_countdown_abs.txt")

    def test_paths_full_traces(self, capsys):
        _, out, _ = run_cli(capsys, "paths", COUNTDOWN_ABS, "--limit", "2", "--full-traces")
        assert out.count("> 0  env([],[])") == 2

    def test_fixpoint(self, capsys):
        code, out, _ = run_cli(capsys, "fixpoint", COUNTDOWN_ABS)
        assert code == 0
        assert out == golden("fixpoint_countdown_abs.txt")

    def test_query(self, capsys):
        code, out, _ = run_cli(capsys, "query", COUNTDOWN, "instr(FromPC,if1(_,_,ToPC),_)")
        assert code == 0
        assert out == "FromPC = 6,\nToPC = 3 ? ;\nno\n"

    def test_query_without_answer(self, capsys):
        code, out, _ = run_cli(capsys, "query", COUNTDOWN, "instr(PC,dup,2)")
        assert (code, out) == (1, "no\n")

    def test_sign_program_run_concretely(self, capsys):
        code, _, err = run_cli(capsys, "run", COUNTDOWN_ABS)
        assert code == 2
        assert "not a concrete value" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "run", str(tmp_path / "absent.bc"))
        assert code == 2
        assert err.startswith("error: bytecode:")

    def test_malformed_file(self, capsys, tmp_path):
        path = tmp_path / "bad.bc"
        path.write_text("instr(0,iconst(1),1).\ninstr(1,wobble,1).\n")
        code, _, err = run_cli(capsys, "run", str(path))
        assert code == 2
        assert "line 2" in err

    def test_underflow(self, capsys, tmp_path):
        path = tmp_path / "underflow.bc"
        path.write_text("instr(0,dup,1).\ninstr(1,return,0).\n")
        code, _, err = run_cli(capsys, "run", str(path))
        assert code == 3
        assert "*** Could not pop from stack: env([],[])" in err

    def test_subtraction_has_no_sign_table(self, capsys, tmp_path):
        path = tmp_path / "sub.bc"
        path.write_text("instr(0,iconst(pos),1).\ninstr(1,dup,1).\ninstr(2,iop(-),1).\ninstr(3,return,0).\n")
        code, _, _ = run_cli(capsys, "paths", str(path))
        assert code == 3


class TestFormulaCommands:
    """typecheck and prop."""

    def test_typecheck(self, capsys):
        code, out, _ = run_cli(capsys, "typecheck", "and(eq(union([z],[x,y]),u),gt(z,v))")
        assert code == 0
        assert out == golden("typecheck_union.txt")

    def test_typecheck_error(self, capsys):
        code, out, _ = run_cli(capsys, "typecheck", "and(eq(x,1),eq([],x))")
        assert code == 1
        assert out == golden("typecheck_error.txt")

    def test_typecheck_from_file(self, capsys, tmp_path):
        path = tmp_path / "formula.txt"
        path.write_text("eq(x,union([],[]))\n")
        code, out, _ = run_cli(capsys, "typecheck", f"@{path}")
        assert code == 0
        assert out == "Typing env: [id(x,set(_1))]\nR = predicate\n"

    def test_typecheck_parse_error(self, capsys):
        code, _, _ = run_cli(capsys, "typecheck", "eq(x,")
        assert code == 2

    def test_typecheck_long_set_literal(self, capsys):
        code, out, _ = run_cli(capsys, "typecheck", "eq(x,[" + ",".join(["1"] * 1200) + "])")
        assert (code, out) == (0, "Typing env: [id(x,set(integer))]\nR = predicate\n")

    def test_typecheck_nesting_beyond_recursion_limit(self, capsys):
        depth = 5000
        code, out, err = run_cli(capsys, "typecheck", "and(" * depth + "gt(x,1)" + ",gt(x,1))" * depth)
        assert (code, out) == (3, "")
        assert "nests too deeply" in err

    def test_prop(self, capsys):
        code, out, _ = run_cli(capsys, "prop", "not(const(X))")
        assert (code, out) == (0, "X = false ? ;\nno\n")

    def test_prop_nsat(self, capsys):
        code, out, _ = run_cli(capsys, "prop", "or(const(X),const(Y))", "--mode", "nsat")
        assert (code, out) == (0, "X = false,\nY = false ? ;\nno\n")

    def test_prop_unsatisfiable(self, capsys):
        code, out, _ = run_cli(capsys, "prop", "and(const(X),not(const(X)))")
        assert (code, out) == (1, "no\n")

    def test_prop_ground(self, capsys):
        _, out, _ = run_cli(capsys, "prop", "not(const(false))")
        assert out == "yes ? ;\nno\n"


class TestProcessCommands:
    """proc-step, proc-traces and proc-reach."""

    def test_step(self, capsys):
        code, out, _ = run_cli(capsys, "proc-step", "'||'('->'(a,stop),'->'(b,stop))")
        assert code == 0
        assert out == golden("proc_step.txt")

    def test_step_stuck(self, capsys):
        assert run_cli(capsys, "proc-step", "stop")[:2] == (1, "no\n")

    def test_traces(self, capsys):
        code, out, _ = run_cli(capsys, "proc-traces", "a -> stop || b -> stop", "--length", "2")
        assert code == 0
        assert out == golden("proc_traces.txt")

    @pytest.mark.parametrize("strategy", ["bfs", "dfs", "best_first"])
    def test_reach(self, capsys, strategy):
        code, out, _ = run_cli(
            capsys, "proc-reach", "a -> stop || b -> stop", "--strategy", strategy, "--deadlock-trace"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[:3] == ["states: 4", "deadlocks: 1", "deadlock: '||'(stop,stop)"]
        assert lines[3] == "deadlock trace: [a,b]"

    def test_reach_bad_strategy(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["proc-reach", "stop", "--strategy", "random"])
        assert exc.value.code == 2


class TestSolveCommand:
    """solve with delayed goals."""

    def test_equation_system(self, capsys):
        code, out, _ = run_cli(capsys, "solve", "plus(X,Y,Z), plus(Z,1,X), plus(X,10,20)")
        assert code == 0
        assert out == golden("solve_plus_system.txt")

    def test_floundered(self, capsys):
        code, out, _ = run_cli(capsys, "solve", "plus(X,Y,Z)")
        assert (code, out) == (4, "floundered: plus(X,Y,Z)\nno\n")

    def test_no_solution(self, capsys):
        assert run_cli(capsys, "solve", "X = a, X = b")[:2] == (1, "no\n")

    def test_limit_on_infinite_stream(self, capsys):
        code, out, _ = run_cli(capsys, "solve", "nat(X)", "--limit", "2")
        assert (code, out) == (0, "X = 0 ? ;\nX = s(0) ? ;\n")

    def test_deep_answers_render(self, capsys):
        code, out, _ = run_cli(capsys, "solve", "nat(X)", "--limit", "1200")
        lines = out.splitlines()
        assert code == 0
        assert len(lines) == 1200
        assert lines[-1] == "X = " + "s(" * 1199 + "0" + ")" * 1199 + " ? ;"

    def test_limit_validated(self, capsys):
        code, _, err = run_cli(capsys, "solve", "nat(X)", "--limit", "0")
        assert code == 2
        assert "limit" in err


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "app.main", "run", COUNTDOWN],
        cwd=ROOT,
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout == golden("run_countdown.txt")
