import json

import pytest

from supercongruences.cli import main
from supercongruences.harness import (
    Report,
    VerificationPlan,
    exit_code,
    render_report,
    resolve_checks,
    run_verification,
)
from supercongruences.registry import REGISTRY, UnknownCheckError


class TestPlan:
    def test_resolve_selectors(self):
        assert resolve_checks("A2,A3") == ("A2", "A3")
        core = resolve_checks("all-core")
        assert "A2" in core and "DNEW1" not in core
        everything = resolve_checks("all-extended")
        assert set(everything) == set(REGISTRY)
        assert resolve_checks("all-core", include_extended=True) == everything

    def test_duplicates_collapse(self):
        assert resolve_checks("A2,A2,A3") == ("A2", "A3")

    def test_unknown_id(self):
        with pytest.raises(UnknownCheckError):
            resolve_checks("A2,NOPE")
        with pytest.raises(UnknownCheckError):
            VerificationPlan(checks=("A2",), lo=5, hi=7, exponent_overrides={"X": 2})

    def test_invalid_ranges(self):
        with pytest.raises(ValueError):
            VerificationPlan(checks=("A2",), lo=10, hi=5)
        with pytest.raises(ValueError):
            VerificationPlan(checks=("A2",), lo=5, hi=7, jobs=0)
        with pytest.raises(ValueError):
            VerificationPlan(checks=("A2",), lo=5, hi=7, exponent_overrides={"A2": 9})

    def test_primes_below_5_skipped(self):
        assert VerificationPlan(checks=("A2",), lo=2, hi=6).primes() == [5]
        assert VerificationPlan(checks=("A2",), lo=4, hi=4).primes() == []


class TestRunVerification:
    def test_a2_sweep_5_to_50(self):
        report = run_verification(VerificationPlan(checks=("A2",), lo=5, hi=50))
        assert len(report.results) == 13  # 13 primes in [5, 50]
        assert report.pass_count == 13 and report.all_passed
        assert exit_code(report) == 0

    def test_all_core_at_p5(self):
        report = run_verification(VerificationPlan(checks=("all-core",), lo=5, hi=5))
        assert report.all_passed
        assert len(report.results) == 27

    def test_empty_range(self):
        report = run_verification(VerificationPlan(checks=("A2",), lo=4, hi=4))
        assert report.results == []
        assert render_report(report, "json") == '{"results":[],"summary":{"pass":0,"fail":0}}'
        assert exit_code(report) == 0

    def test_results_ordered_by_prime_then_id(self):
        plan = VerificationPlan(checks=("B2", "A2", "B1"), lo=5, hi=13)
        report = run_verification(plan)
        keys = [(r.p, r.id) for r in report.results]
        assert keys == sorted(keys)

    def test_failure_exit_code(self):
        plan = VerificationPlan(
            checks=("A2",), lo=5, hi=5, exponent_overrides={"A2": 3}
        )
        report = run_verification(plan)
        assert report.fail_count == 1
        assert exit_code(report) == 1

    def test_parallel_matches_serial_bytes(self):
        checks = ("A2", "B1", "BL1", "B14", "GRANV", "C1")
        serial = run_verification(VerificationPlan(checks=checks, lo=5, hi=31, jobs=1))
        parallel = run_verification(VerificationPlan(checks=checks, lo=5, hi=31, jobs=3))
        assert render_report(serial, "json") == render_report(parallel, "json")
        assert render_report(serial, "csv") == render_report(parallel, "csv")


@pytest.fixture(scope="module")
def report():
    return run_verification(VerificationPlan(checks=("A2", "B1"), lo=5, hi=7))


class TestRendering:

    def test_json_schema(self, report):
        payload = json.loads(render_report(report, "json"))
        assert set(payload) == {"results", "summary"}
        row = payload["results"][0]
        assert list(row) == ["check", "prime", "exp", "lhs", "rhs", "pass"]
        assert isinstance(row["lhs"], str) and isinstance(row["rhs"], str)
        assert payload["summary"] == {"pass": 4, "fail": 0}

    def test_json_optional_sections(self, report):
        payload = json.loads(
            render_report(report, "json", include_timing=True, include_registry=True)
        )
        assert payload["elapsed_ms"] >= 0
        assert payload["registry"]["A2"]["exp"] == 2
        assert "description" in payload["registry"]["B1"]

    def test_csv(self, report):
        lines = render_report(report, "csv").splitlines()
        assert lines[0] == "check,prime,exp,lhs,rhs,pass"
        assert len(lines) == 5
        assert lines[1].startswith("A2,5,2,")

    def test_table(self, report):
        text = render_report(report, "table")
        assert "summary: 4 pass, 0 fail" in text
        assert text.count("yes") == 4

    def test_unknown_format(self, report):
        with pytest.raises(ValueError):
            render_report(report, "xml")

    def test_failing_sub_checks_serialized(self):
        plan = VerificationPlan(
            checks=("B14",), lo=5, hi=5, exponent_overrides={"B14": 2}
        )
        report = run_verification(plan)
        if report.fail_count:  # the mod-p congruence generically breaks mod p^2
            payload = json.loads(render_report(report, "json"))
            assert payload["results"][0]["sub_failures"]


class TestCli:
    def test_verify_json(self, capsys):
        code = main(
            ["verify", "--checks", "A2,A4", "--primes", "5..20", "--format", "json", "--quiet"]
        )
        out, err = capsys.readouterr()
        assert code == 0
        payload = json.loads(out)
        assert payload["summary"] == {"pass": 12, "fail": 0}  # 6 primes x 2 checks

    def test_single_prime_argument(self, capsys):
        code = main(["verify", "--checks", "A2", "--primes", "7", "--quiet"])
        out, _ = capsys.readouterr()
        assert code == 0 and "A2" in out

    def test_progress_on_stderr_not_stdout(self, capsys):
        main(["verify", "--checks", "A2", "--primes", "5..7", "--format", "json"])
        out, err = capsys.readouterr()
        assert "p=5" in err and "p=5" not in out
        json.loads(out)  # stdout stays machine-readable

    def test_unknown_check_is_usage_error(self, capsys):
        code = main(["verify", "--checks", "NOPE", "--primes", "5..7"])
        _, err = capsys.readouterr()
        assert code == 2 and "NOPE" in err

    def test_bad_subcommand_is_usage_error(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_override_failure_exit_code(self, capsys):
        code = main(
            ["verify", "--checks", "A2", "--primes", "5", "--override", "A2=3", "--quiet"]
        )
        assert code == 1

    def test_list(self, capsys):
        assert main(["list"]) == 0
        out, _ = capsys.readouterr()
        for check_id in REGISTRY:
            assert check_id in out

    def test_identities_subset(self, capsys):
        code = main(["identities", "--ids", "I-B6,I-D7", "--n-max", "20", "--ij-max", "6"])
        out, _ = capsys.readouterr()
        assert code == 0
        assert "I-B6" in out and "ok" in out

    def test_identities_unknown_id(self, capsys):
        assert main(["identities", "--ids", "I-NOPE"]) == 2

    def test_sequence_exact(self, capsys):
        assert main(["sequence", "--name", "motzkin", "--count", "8"]) == 0
        out, _ = capsys.readouterr()
        assert out.split() == ["1", "1", "2", "4", "9", "21", "51", "127"]

    def test_sequence_modular(self, capsys):
        code = main(
            ["sequence", "--name", "central-binomial", "--count", "5",
             "--prime", "5", "--exp", "2"]
        )
        out, _ = capsys.readouterr()
        assert code == 0
        assert out.split() == ["1", "2", "6", "20", "20"]

    def test_sequence_harmonic(self, capsys):
        assert main(["sequence", "--name", "harmonic", "--count", "5", "--prime", "5"]) == 0
        out, _ = capsys.readouterr()
        assert out.split() == ["0", "1", "4", "1", "0"]

    def test_sequence_harmonic_exact(self, capsys):
        assert main(["sequence", "--name", "harmonic", "--count", "4"]) == 0
        out, _ = capsys.readouterr()
        assert out.split() == ["0", "1", "3/2", "11/6"]

    def test_help_exits_cleanly(self):
        assert main(["--help"]) == 0
        assert main(["verify", "--help"]) == 0


class TestReportObject:
    def test_counts_match_itemization(self):
        report = run_verification(
            VerificationPlan(checks=("A2", "B1"), lo=5, hi=13)
        )
        assert report.pass_count + report.fail_count == len(report.results)
        assert isinstance(report, Report) and report.version
