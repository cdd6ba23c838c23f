import json

import pytest
from hypothesis import given, settings, strategies as st

import main as entry_point
from check_dependencies import check_package
from common.utils import default_report_path, sanitize_filename
from harness import IdentityCheck, Report, Status, witness_of
from harness.configs import SUITE_NAMES, SuiteConfig
from harness.errors import ConfigError
from harness.harness_cli import EXIT_CONFIG, EXIT_FAIL, EXIT_PASS, main
from harness.registry import SUITES, build_checks, run, suite_members
from harness.runner import run_check, run_checks, skipped
from uqsl2 import E, K, format_element


def failing_check(identity_id="demo.fail"):
    return IdentityCheck(identity_id, "never holds", {"n": 1}, lambda: "1 != 0")


def passing_check(identity_id="demo.pass"):
    return IdentityCheck(identity_id, "always holds", {"n": 1}, lambda: None)


class TestSuiteConfig:
    def test_defaults_validate(self):
        cfg = SuiteConfig().validate()
        assert cfg.suite in SUITE_NAMES

    @pytest.mark.parametrize("changes", [
        {"suite": "braids"},
        {"n": 0},
        {"l": 4},
        {"l": 1},
        {"jobs": 0},
        {"max_degree": -1},
        {"series_order": 0},
    ])
    def test_rejects(self, changes):
        cfg = SuiteConfig()
        for name, value in changes.items():
            setattr(cfg, name, value)
        with pytest.raises(ConfigError):
            cfg.validate()

    def test_bound_violation(self):
        assert SuiteConfig(n=3, l=3).bound_violation() is None
        assert "n=4" in SuiteConfig(n=4, l=3).bound_violation()
        assert "l=7" in SuiteConfig(n=1, l=7).bound_violation()
        assert SuiteConfig(n=4, l=7, override_bounds=True).bound_violation() is None

    def test_echo(self):
        echo = SuiteConfig(suite="center", n=2, seed=7).echo()
        assert echo["suite"] == "center" and echo["n"] == 2 and echo["seed"] == 7


class TestRunner:
    def test_exception_becomes_failure(self):
        def explode():
            raise ZeroDivisionError("pole")
        record = run_check(IdentityCheck("demo.raise", "raises", {}, explode))
        assert record.status is Status.FAIL
        assert "ZeroDivisionError" in record.witness

    def test_skipped_is_not_a_failure(self):
        report = run_checks([skipped("demo.skip", "too big", "bound"), passing_check()], "demo")
        assert report.passed
        assert report.summary == {"pass": 1, "fail": 0, "skipped": 1, "total": 2}

    @settings(max_examples=10, deadline=None)
    @given(st.permutations(["c.3", "a.1", "b.2", "d.4"]), st.integers(1, 4))
    def test_report_order_is_independent_of_jobs(self, ids, jobs):
        report = run_checks([passing_check(i) for i in ids], "demo", jobs)
        assert [record.identity_id for record in report.records] == sorted(ids)

    def test_failures(self):
        report = run_checks([failing_check(), passing_check()], "demo")
        assert not report.passed
        assert [record.identity_id for record in report.failures()] == ["demo.fail"]
        assert report.record("demo.fail").witness == "1 != 0"


class TestReport:
    def test_json_schema(self):
        report = run_checks([failing_check(), passing_check()], "demo", config_echo={"n": 1})
        data = json.loads(report.to_json())
        assert set(data) == {"suite", "tool_version", "config", "summary", "records"}
        assert set(data["records"][0]) == {"identity_id", "citation", "inputs", "status", "witness",
                                           "wall_time"}
        assert data["records"][0]["status"] == "fail"

    def test_write(self, tmp_path):
        report = run_checks([passing_check()], "demo")
        path = report.write(tmp_path / "nested" / "demo.json")
        assert json.loads(path.read_text(encoding="utf-8"))["summary"]["pass"] == 1

    def test_merged(self):
        merged = Report("a", [], {"n": 1}).merged(run_checks([passing_check()], "b", config_echo={"l": 3}))
        assert merged.suite == "a" and merged.config_echo == {"n": 1, "l": 3}

    def test_witness_of(self):
        assert witness_of({"x": 0, "y": [0, None]}) is None
        assert witness_of({"x": 0, "y": [0, 2]}) == "y: [1]: 2"
        residual = E * K - K * E
        assert witness_of(residual) == format_element(residual)


class TestRegistry:
    def test_every_suite_has_a_builder(self):
        assert set(SUITES) | {"all"} == set(SUITE_NAMES)
        assert suite_members("all") == list(SUITES)

    def test_out_of_bounds_is_skipped(self):
        report = run(SuiteConfig(suite="threading", n=3, l=7))
        assert report.passed
        assert report.summary["skipped"] == 1
        assert "--override-bounds" in report.records[0].witness

    def test_presentation(self):
        report = run(SuiteConfig(suite="presentation", n=2))
        assert report.passed, [record.witness for record in report.failures()]
        assert report.summary["total"] == 8

    def test_deterministic(self):
        first = run(SuiteConfig(suite="center", n=1))
        second = run(SuiteConfig(suite="center", n=1, jobs=3))
        assert [(r.identity_id, r.status) for r in first.records] == \
            [(r.identity_id, r.status) for r in second.records]

    def test_bad_curve(self):
        with pytest.raises(ConfigError):
            build_checks(SuiteConfig(suite="skein", n=1, curves=["arc:1..2"]))

    def test_all_ids_are_unique(self):
        ids = [check.identity_id for check in build_checks(SuiteConfig(suite="all", n=1, l=3))]
        assert len(ids) == len(set(ids))
        assert len(ids) >= 40

    @pytest.mark.slow
    def test_full_run(self):
        report = run(SuiteConfig(suite="all", n=1, l=3, jobs=4))
        assert report.passed, [(r.identity_id, r.witness) for r in report.failures()]
        assert report.summary["total"] >= 40


class TestCli:
    def test_pass(self, tmp_path):
        path = tmp_path / "presentation.json"
        assert main(["--suite", "presentation", "--n", "1", "--report", str(path)]) == EXIT_PASS
        data = json.loads(path.read_text(encoding="utf-8"))
        assert data["suite"] == "presentation"
        assert data["summary"]["fail"] == 0
        assert data["config"]["n"] == 1

    def test_config_error(self, tmp_path):
        assert main(["--suite", "center", "--l", "4", "--report", str(tmp_path / "r.json")]) == EXIT_CONFIG

    def test_bad_curve(self, tmp_path):
        argv = ["--suite", "skein", "--curve", "loop:1", "--report", str(tmp_path / "r.json")]
        assert main(argv) == EXIT_CONFIG

    def test_skipped_run_passes(self, tmp_path):
        argv = ["--suite", "threading", "--n", "3", "--l", "7", "--report", str(tmp_path / "r.json")]
        assert main(argv) == EXIT_PASS

    def test_failure_exit(self, tmp_path, monkeypatch):
        monkeypatch.setitem(SUITES, "center", lambda cfg: [failing_check()])
        argv = ["--suite", "center", "--report", str(tmp_path / "r.json")]
        assert main(argv) == EXIT_FAIL

    def test_normalize(self, capsys):
        text = format_element(K * E)
        assert main(["--normalize", text]) == EXIT_PASS
        assert capsys.readouterr().out.strip() == text

    def test_normalize_rejects(self, capsys):
        assert main(["--normalize", "[1*v^0] * K"]) == EXIT_CONFIG


class TestCommon:
    def test_default_report_path(self, tmp_path):
        path = default_report_path("all", 1, 3, tmp_path / "reports")
        assert path == (tmp_path / "reports" / "all_n1_l3.json").resolve()
        assert path.parent.is_dir()

    def test_sanitize_filename(self):
        assert sanitize_filename("threading n=2 l=3") == "threading_n_2_l_3"
        with pytest.raises(ValueError):
            sanitize_filename("///")

    def test_dependency_check(self):
        ok, message = check_package("sympy")
        assert ok, message
        ok, message = check_package("surely_not_installed_pkg")
        assert not ok and "NOT installed" in message


class TestEntryPoint:
    def test_failing_identity_exits_with_one(self, tmp_path, monkeypatch):
        monkeypatch.setitem(SUITES, "center", lambda cfg: [passing_check(), failing_check()])
        argv = ["--suite", "center", "--report", str(tmp_path / "r.json")]
        assert entry_point.main(argv) == EXIT_FAIL == 1
        data = json.loads((tmp_path / "r.json").read_text(encoding="utf-8"))
        assert data["summary"]["fail"] == 1

    def test_passing_run_exits_with_zero(self, tmp_path, monkeypatch):
        monkeypatch.setitem(SUITES, "center", lambda cfg: [passing_check()])
        argv = ["--suite", "center", "--report", str(tmp_path / "r.json")]
        assert entry_point.main(argv) == EXIT_PASS

    def test_crash_exits_with_one(self, monkeypatch):
        def explode(argv):
            raise RuntimeError("boom")

        monkeypatch.setattr(entry_point.harness_cli, "main", explode)
        assert entry_point.main(["--suite", "center"]) == 1
