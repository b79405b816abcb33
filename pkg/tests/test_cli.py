"""CLI behavior: subcommand plumbing, exit codes, reproducibility."""

import json

import pytest

from pentaset.cli import EXIT_OK, EXIT_USAGE, parse_config, run_cli


def run(capsys, *argv):
    code = run_cli(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


class TestParsing:
    def test_radius_is_squared_exactly(self):
        cfg = parse_config(["generate", "--radius", "3/2"])
        assert cfg.radius_sq == pytest.approx(2.25) and str(cfg.radius_sq) == "9/4"

    def test_radius_sq_direct(self):
        assert parse_config(["generate", "--radius-sq", "25"]).radius_sq == 25

    def test_defaults(self):
        cfg = parse_config(["generate", "--radius", "1"])
        assert cfg.window_sq == 1 and cfg.format == "jsonl" and cfg.out is None

    def test_missing_radius_is_usage_error(self):
        assert run_cli(["generate"]) == EXIT_USAGE

    def test_both_radius_flags_is_usage_error(self):
        assert run_cli(["generate", "--radius", "1", "--radius-sq", "1"]) == EXIT_USAGE

    def test_bad_rational_is_usage_error(self):
        assert run_cli(["generate", "--radius", "abc"]) == EXIT_USAGE

    def test_no_subcommand_is_usage_error(self):
        assert run_cli([]) == EXIT_USAGE

    def test_nonpositive_window_is_usage_error(self):
        assert run_cli(["generate", "--radius", "1", "--window-sq", "0"]) == EXIT_USAGE


class TestGenerate:
    def test_eleven_records(self, capsys):
        code, out = run(capsys, "generate", "--radius", "1")
        assert code == EXIT_OK
        assert len(out.splitlines()) == 12  # header + 11 points

    def test_csv_format(self, capsys, tmp_path):
        dest = tmp_path / "snap.csv"
        code, _ = run(capsys, "generate", "--radius", "1", "--format", "csv",
                      "--out", str(dest))
        assert code == EXIT_OK
        lines = dest.read_text().splitlines()
        assert lines[1].startswith("a0,a1,a2,a3")
        assert len(lines) == 13

    def test_reproducible(self, capsys):
        _, a = run(capsys, "generate", "--radius", "2")
        _, b = run(capsys, "generate", "--radius", "2")
        assert a == b

    def test_unwritable_path_is_io_error(self, capsys):
        code, _ = run(capsys, "generate", "--radius", "1",
                      "--out", "/nonexistent-dir/snap.jsonl")
        assert code == 3


class TestAnalyze:
    def test_classes_filled(self, capsys):
        code, out = run(capsys, "analyze", "--radius", "2")
        assert code == EXIT_OK
        assert '"class":"short"' in out or '"class":"long"' in out

    def test_threads_do_not_change_output(self, capsys):
        _, a = run(capsys, "analyze", "--radius", "4")
        _, b = run(capsys, "analyze", "--radius", "4", "--threads", "3")
        assert a == b


class TestVerify:
    def test_all_checks_pass(self, capsys):
        code, out = run(capsys, "verify", "--radius", "4")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["all_pass"] is True
        assert len(doc["reports"]) == 5

    def test_single_check_selection(self, capsys):
        code, out = run(capsys, "verify", "--radius", "3", "--check", "rotation")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert [r["check"] for r in doc["reports"]] == ["rotation"]

    def test_non_unit_window_skips_and_passes(self, capsys):
        code, out = run(capsys, "verify", "--radius-sq", "4", "--window-sq", "4")
        assert code == EXIT_OK
        doc = json.loads(out)
        skipped = {r["check"] for r in doc["reports"] if r["skipped"]}
        assert skipped == {"unit-lemma", "two-distance", "step-existence"}

    def test_stdout_is_valid_json(self, capsys):
        _, out = run(capsys, "verify", "--radius", "2")
        json.loads(out)


class TestStats:
    def test_summary_fields(self, capsys):
        code, out = run(capsys, "stats", "--radius", "1")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["count"] == 11
        assert set(doc["classes"]) == {"short", "long", "other", "unknown"}


class TestRender:
    def test_svg_with_highlights(self, capsys, tmp_path):
        dest = tmp_path / "fig.svg"
        code, _ = run(capsys, "render", "--radius", "6", "--highlight-roots",
                      "--out", str(dest))
        assert code == EXIT_OK
        svg = dest.read_text()
        assert svg.count('class="highlight"') == 6

    def test_color_classes_runs_analysis(self, capsys):
        code, out = run(capsys, "render", "--radius", "3", "--color-classes")
        assert code == EXIT_OK
        assert 'fill="#d62728"' in out
