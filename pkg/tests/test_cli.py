"""
Tests for configuration loading, table grids and the command-line entry point.
"""

import io
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

import main as cli
from errors import ConvergenceError
from kernels import PointConfig
from orchestrators import cdf, table, verify
from schemas import CheckResult
from utils import RunConfig, load_config


def test_load_config_precedence():
    """Flags beat environment variables, which beat defaults."""
    print("Testing configuration precedence...")

    assert load_config({}, environ={}) == RunConfig()

    environ = {"AF_NODES": "24", "AF_TOL": "1e-8", "AF_WORKERS": "", "OTHER": "x"}
    config = load_config({"tol": None}, environ=environ)
    assert config.ray_nodes == 24 and config.tol == 1e-8 and config.workers == 4

    config = load_config({"ray_nodes": 32, "strict": True}, environ=environ)
    assert config.ray_nodes == 32 and config.tol == 1e-8 and config.strict

    for environ in ({"AF_NODES": "many"}, {"AF_Z_RADIUS": "1.5"}):
        try:
            load_config({}, environ=environ)
            assert False, f"Should have raised ValueError for {environ}"
        except ValueError:
            pass

    print("✓ Configuration precedence test passed")


def test_run_config():
    config = RunConfig()
    refined = config.refined()
    assert refined.ray_nodes == 96 and refined.circle_nodes == 64 and refined.halfline_nodes == 128
    assert refined.truncation == config.truncation
    assert config.quadratic_truncation == 12.0
    assert config.snapshot()["lambda_max"] == 18.0

    for field, value in (("ray_nodes", 1), ("tol", 0.0), ("workers", 0)):
        try:
            RunConfig(**{field: value})
            assert False, f"Should have raised ValueError for {field}={value}"
        except ValueError:
            pass


def test_grid():
    print("Testing table grids...")

    assert table.grid(-5.0, 2.0, 1.0) == [-5.0, -4.0, -3.0, -2.0, -1.0, 0.0, 1.0, 2.0]
    assert table.grid(0.0, 1.0, 0.1)[-1] == 1.0
    assert table.grid(0.0, 1.0, 0.3) == [0.0, 0.3, 0.6, 0.8999999999999999]

    for start, stop, step in ((0.0, 1.0, 0.0), (1.0, 1.0, 0.5), (2.0, 1.0, 0.5)):
        try:
            table.grid(start, stop, step)
            assert False, f"Should have raised ValueError for {start}, {stop}, {step}"
        except ValueError:
            pass

    print("✓ Grid test passed")


def test_tw_table():
    print("Testing the Tracy-Widom table...")

    stream = io.StringIO()
    df = table.run("tw", 6.0, 8.0, 1.0, RunConfig(workers=2), stream=stream)
    lines = stream.getvalue().splitlines()
    assert lines[0] == "s,F_GUE(s)"
    assert len(lines) == 4
    assert df["s"].tolist() == [6.0, 7.0, 8.0]
    assert all(abs(p - 1.0) < 1e-6 for p in df["F_GUE(s)"])

    try:
        table.run("joint-slice", 0.0, 1.0, 1.0, RunConfig(), stream=io.StringIO())
        assert False, "joint-slice without --fix should be rejected"
    except ValueError:
        pass

    print("✓ Tracy-Widom table test passed")


def test_cdf_run():
    print("Testing the cdf orchestrator...")

    report = cdf.run(PointConfig((0.0,), (8.0,)), "b-minus-a", RunConfig(), command="cdf --points 0:8")
    assert report.passed
    assert [c.check for c in report.checks] == ["b-minus-a"]
    assert abs(report.checks[0].value - 1.0) < 1e-8
    assert report.to_text(timings=False).startswith("command=cdf --points 0:8\n")

    try:
        cdf.compute_cdf(PointConfig((0.0,), (0.0,)), "monte-carlo", RunConfig())
        assert False, "Should have raised ValueError"
    except ValueError:
        pass

    print("✓ cdf orchestrator test passed")


def test_exit_codes():
    print("Testing exit codes...")

    assert cli.main([]) == cli.EXIT_USAGE
    assert cli.main(["cdf"]) == cli.EXIT_USAGE
    assert cli.main(["verify", "--suite", "unknown"]) == cli.EXIT_USAGE
    assert cli.main(["cdf", "--points", "1:0,0:0"]) == cli.EXIT_USAGE
    assert cli.main(["cdf", "--points", "0:0", "--method", "liu-sum", "--cutoff", "9"]) == cli.EXIT_USAGE
    assert cli.main(["--quiet", "table", "tw", "--from", "1", "--to", "1"]) == cli.EXIT_USAGE
    assert cli.main(["--help"]) == cli.EXIT_OK

    # a tolerance no refinement can meet
    unreachable = ["--quiet", "--tol", "1e-30", "cdf", "--points", "0:0", "--method", "b-minus-a"]
    assert cli.main(unreachable) == cli.EXIT_NUMERICAL
    assert cli.main(["--strict"] + unreachable) == cli.EXIT_NUMERICAL

    print("✓ Exit code test passed")


def test_verify_exit_codes():
    """A failed check exits 1, a non-converged unit exits 3."""
    print("Testing verify exit codes...")

    def failing(config):
        return [CheckResult.compare("airy", "forced", "1 = 0", 1.0, 0.0, 1e-9)]

    def diverging(config):
        raise ConvergenceError("refinement estimate 1e-3 above tolerance 1e-6")

    original = verify.suite_units
    try:
        verify.suite_units = lambda suite: {"forced": failing}
        assert cli.main(["--quiet", "verify", "--suite", "airy"]) == cli.EXIT_CHECK_FAILED

        verify.suite_units = lambda suite: {"forced": failing, "diverging": diverging}
        report = verify.run("airy", RunConfig())
        assert not report.converged and not report.passed
        assert [c.check for c in report.unconverged] == ["diverging"]
        assert cli.main(["--quiet", "verify", "--suite", "airy"]) == cli.EXIT_NUMERICAL
        assert cli.main(["--quiet", "--strict", "verify", "--suite", "airy"]) == cli.EXIT_NUMERICAL
    finally:
        verify.suite_units = original

    print("✓ Verify exit code test passed")


def test_cdf_convergence_flag():
    print("Testing cdf convergence flag...")

    cfg = PointConfig((0.0,), (0.0,))
    report = cdf.run(cfg, "b-minus-a", RunConfig())
    assert report.converged and report.checks[0].converged

    report = cdf.run(cfg, "b-minus-a", RunConfig(tol=1e-30))
    assert report.passed and not report.converged
    assert "check.cdf.b-minus-a.converged=false" in report.to_text().splitlines()
    assert "converged=false" in report.to_text().splitlines()

    print("✓ cdf convergence flag test passed")


def run_all_tests():
    """Run all tests."""
    print("=" * 80)
    print("Running CLI tests")
    print("=" * 80)

    try:
        test_load_config_precedence()
        test_run_config()
        test_grid()
        test_tw_table()
        test_cdf_run()
        test_exit_codes()
        test_verify_exit_codes()
        test_cdf_convergence_flag()

        print("\n" + "=" * 80)
        print("✓ All tests passed!")
        print("=" * 80)
        return True

    except AssertionError as e:
        print(f"\n✗ Test failed: {e}")
        return False
    except Exception as e:
        print(f"\n✗ Error running tests: {e}")
        import traceback
        traceback.print_exc()
        return False


if __name__ == "__main__":
    success = run_all_tests()
    sys.exit(0 if success else 1)
