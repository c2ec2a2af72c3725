import json
import unittest
from unittest.mock import patch

import pytest

from brauer_lab import cli, config


class TestParseArgs(unittest.TestCase):
    def test_verify_defaults(self):
        with patch.object(config, "PRIMES_FROM_ENV", False), patch.object(config, "DEFAULT_FIELDS", "q,fp2,fp3,fp5"):
            cfg = cli.parse_args(["verify", "--m", "1", "--n", "2"])
        self.assertEqual(cfg.command, "verify")
        self.assertEqual(cfg.suite, "all")
        self.assertEqual(cfg.fields, ["q", "fp2", "fp3", "fp5"])
        self.assertEqual(cfg.cache, config.CACHE_FILE)
        self.assertIsNone(cfg.f)

    def test_primes_from_environment(self):
        with patch.object(config, "PRIMES_FROM_ENV", True), patch.object(config, "SUPPORTED_PRIMES", (7,)):
            cfg = cli.parse_args(["verify", "--m", "1", "--n", "2"])
        self.assertEqual(cfg.fields, ["q", "fp7"])

    def test_explicit_options(self):
        cfg = cli.parse_args(["verify", "--suite", "maximal", "--m", "2", "--n", "3", "--g", "0", "--lam", "2,1",
                              "--fields", "q,fp3", "--no-cache"])
        self.assertEqual(cfg.lam, (2, 1))
        self.assertEqual(cfg.fields, ["q", "fp3"])
        self.assertIsNone(cfg.cache)
        self.assertEqual(cfg.spec().maximal_pairs()[0][1].parts, (2, 1))

    def test_other_commands(self):
        self.assertEqual(cli.parse_args(["list-suites"]).command, "list-suites")
        cfg = cli.parse_args(["show", "--check", "ideal", "--cache", "x.jsonl"])
        self.assertEqual((cfg.command, cfg.check, cfg.cache), ("show", "ideal", "x.jsonl"))

    def test_as_report_drops_io_settings(self):
        cfg = cli.parse_args(["verify", "--m", "1", "--n", "2", "--fields", "q", "--out", "r.json"])
        report = cfg.as_report()
        self.assertNotIn("out", report)
        self.assertNotIn("cache", report)
        self.assertEqual(report["fields"], ["q"])


@pytest.mark.parametrize("argv", [
    ["verify", "--m", "2", "--n", "8", "--budget", "100"],
    ["verify", "--m", "1", "--n", "2", "--f", "3"],
    ["verify", "--m", "1", "--n", "2", "--fields", "fp4"],
    ["verify", "--m", "1", "--n", "2", "--lam", "1,2"],
    ["verify", "--m", "1", "--n", "2", "--suite", "nope"],
    ["verify", "--n", "2"],
])
def test_usage_errors_exit_with_two(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.parse_args(argv)
    assert exc.value.code == 2
    assert "error" in capsys.readouterr().err


def test_budget_message_names_the_size(capsys):
    with pytest.raises(SystemExit):
        cli.parse_args(["verify", "--m", "2", "--n", "8", "--budget", "100"])
    assert "budget exceeded" in capsys.readouterr().err


def test_verify_writes_a_report(tmp_path, cache_file):
    out = tmp_path / "report.json"
    code = cli.main(["verify", "--suite", "duality", "--m", "1", "--n", "2", "--f", "0", "--fields", "q",
                     "--out", str(out), "--cache", cache_file])
    assert code == cli.EXIT_OK
    report = json.loads(out.read_text())
    assert report["version"] == config.CODE_VERSION
    assert report["summary"] == {"passed": 1, "failed": 0}
    result = report["results"][0]
    assert result["check"] == "duality"
    assert result["params"] == {"m": 1, "n": 2, "f": 0, "field": "q"}
    assert (result["expected"], result["computed"], result["pass"]) == (3, 3, True)
    assert isinstance(result["millis"], int)


def test_second_run_is_served_from_the_cache(tmp_path, cache_file):
    argv = ["verify", "--suite", "basis", "--m", "1", "--n", "3", "--fields", "q", "--cache", cache_file]
    assert cli.main(argv + ["--out", str(tmp_path / "a.json")]) == cli.EXIT_OK
    assert cli.main(argv + ["--out", str(tmp_path / "b.json")]) == cli.EXIT_OK
    first = json.loads((tmp_path / "a.json").read_text())["results"][0]
    second = json.loads((tmp_path / "b.json").read_text())["results"][0]
    assert second["millis"] == "cached"
    assert {k: v for k, v in first.items() if k != "millis"} == {k: v for k, v in second.items() if k != "millis"}


def test_injected_fault_fails_the_run(tmp_path):
    out = tmp_path / "fault.json"
    code = cli.main(["verify", "--suite", "presentation", "--m", "1", "--n", "2", "--fields", "q",
                     "--no-cache", "--fault", "wrong-delta", "--out", str(out)])
    assert code == cli.EXIT_FAILED
    result = json.loads(out.read_text())["results"][0]
    assert result["pass"] is False
    assert result["witness"]["relation"] == "e_i^2"


def test_unwritable_report_is_an_internal_error(tmp_path):
    out = tmp_path / "missing" / "report.json"
    code = cli.main(["verify", "--suite", "basis", "--m", "1", "--n", "2", "--fields", "q", "--no-cache",
                     "--out", str(out)])
    assert code == cli.EXIT_INTERNAL


def test_report_to_stdout(capsys):
    code = cli.main(["verify", "--suite", "basis", "--m", "1", "--n", "2", "--fields", "q", "--no-cache"])
    assert code == cli.EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["results"][0]["computed"] == 3


def test_list_suites(capsys):
    assert cli.main(["list-suites"]) == cli.EXIT_OK
    out = capsys.readouterr().out
    assert "field-independence" in out
    assert "bookkeeping" in out


def test_show_lists_cached_results(tmp_path, cache_file, capsys):
    cli.main(["verify", "--suite", "basis", "--m", "1", "--n", "2", "--fields", "q", "--cache", cache_file,
              "--out", str(tmp_path / "r.json")])
    capsys.readouterr()
    assert cli.main(["show", "--check", "basis", "--cache", cache_file]) == cli.EXIT_OK
    info = json.loads(capsys.readouterr().out)
    assert info["suite"] == "basis"
    assert len(info["cached"]) == 1


def test_show_unknown_check_is_a_usage_error(cache_file):
    assert cli.main(["show", "--check", "nope", "--cache", cache_file]) == cli.EXIT_USAGE


def test_unexpected_errors_are_internal(monkeypatch):
    def boom(*args, **kwargs):
        raise RuntimeError("boom")

    monkeypatch.setattr(cli, "run_suite", boom)
    assert cli.main(["verify", "--suite", "basis", "--m", "1", "--n", "2", "--fields", "q", "--no-cache"]) == 3


if __name__ == "__main__":
    unittest.main()
