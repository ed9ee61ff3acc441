# tests/unit/test_orchestration/test_config_loader.py
"""
Tests pour config_loader : fichier YAML, environnement et priorités.
"""

import sys

import pytest

from src.core.config import DEFAULT_METHODS
from src.core.exceptions import UsageError
from src.orchestration.cli_parser import parse_cli_arguments
from src.orchestration.config_loader import (
    load_config_file,
    parse_method_arg,
    parse_named_command,
    resolve_cli_config,
)


def resolve(argv: list[str]):
    return resolve_cli_config(parse_cli_arguments(argv))


def write_config(tmp_path, content: str) -> str:
    path = tmp_path / "bench.yaml"
    path.write_text(content)
    return str(path)


class TestLoadConfigFile:
    def test_valid_file(self, tmp_path):
        path = write_config(tmp_path, "smps: mar\nrepetition: 3\n")
        assert load_config_file(path) == {"smps": "mar", "repetition": 3}

    def test_empty_file(self, tmp_path):
        assert load_config_file(write_config(tmp_path, "")) == {}

    def test_unknown_key(self, tmp_path):
        with pytest.raises(UsageError, match="inconnues"):
            load_config_file(write_config(tmp_path, "repetitions: 3\n"))

    def test_invalid_yaml(self, tmp_path):
        with pytest.raises(UsageError):
            load_config_file(write_config(tmp_path, "smps: [mar\n"))

    def test_not_a_mapping(self, tmp_path):
        with pytest.raises(UsageError):
            load_config_file(write_config(tmp_path, "- mar\n- mcar\n"))

    def test_missing_file(self, tmp_path):
        with pytest.raises(UsageError):
            load_config_file(str(tmp_path / "absent.yaml"))


class TestParsers:
    def test_parse_method_arg(self):
        assert parse_method_arg("na.mean:option=median") == ("na.mean", "option", "median")

    @pytest.mark.parametrize("text", ["na.mean", "na.mean:option", ":option=x", "na.mean:=x"])
    def test_invalid_method_arg(self, text):
        with pytest.raises(UsageError):
            parse_method_arg(text)

    def test_parse_named_command(self):
        assert parse_named_command("ext=python3 'my plugin.py' -v") == (
            "ext",
            ("python3", "my plugin.py", "-v"),
        )

    @pytest.mark.parametrize("text", ["ext", "=cmd", "ext=", "ext=python3 'unterminated"])
    def test_invalid_named_command(self, text):
        with pytest.raises(UsageError):
            parse_named_command(text)


class TestResolveCliConfig:
    """Tests de la fusion option > fichier > environnement > défaut."""

    def test_defaults(self, monkeypatch):
        monkeypatch.setenv("IMPUTE_BENCH_JOBS", "3")
        cfg = resolve(["bench"])

        assert cfg.dataset == "nottem"
        assert cfg.data_path is None
        assert cfg.methods == DEFAULT_METHODS
        assert cfg.smps == "mcar"
        assert cfg.error_parameter == "rmse"
        assert (cfg.miss_from, cfg.miss_to, cfg.interval) == (10.0, 90.0, 10.0)
        assert cfg.repetition == 10
        assert cfg.blck == 50.0
        assert cfg.blckper is True
        assert cfg.score_on == "removed"
        assert cfg.jobs == 3

    def test_file_overrides_defaults(self, tmp_path):
        path = write_config(
            tmp_path,
            "smps: mar\nblck: 6\nblckper: false\nrepetition: 2\nmethods: [na.locf]\n"
            "method_args:\n  na.locf: {}\njobs: 2\n",
        )
        cfg = resolve(["bench", "--config", path])

        assert cfg.smps == "mar"
        assert cfg.blck == 6.0
        assert cfg.blckper is False
        assert cfg.repetition == 2
        assert cfg.methods == ["na.locf"]
        assert cfg.jobs == 2

    def test_flag_overrides_file(self, tmp_path, monkeypatch):
        monkeypatch.setenv("IMPUTE_BENCH_JOBS", "5")
        path = write_config(tmp_path, "repetition: 2\njobs: 2\nblckper: false\n")
        cfg = resolve(
            ["bench", "--config", path, "--repetition", "7", "--jobs", "4", "--blckper"]
        )

        assert cfg.repetition == 7
        assert cfg.jobs == 4
        assert cfg.blckper is True

    def test_file_overrides_environment(self, tmp_path, monkeypatch):
        monkeypatch.setenv("IMPUTE_BENCH_JOBS", "5")
        cfg = resolve(["bench", "--config", write_config(tmp_path, "jobs: 2\n")])
        assert cfg.jobs == 2

    def test_invalid_environment_falls_back_to_cpu_count(self, monkeypatch):
        monkeypatch.setenv("IMPUTE_BENCH_JOBS", "beaucoup")
        monkeypatch.setattr("src.core.config.os.cpu_count", lambda: 6)
        assert resolve(["bench"]).jobs == 6

    def test_cli_data_source_masks_file_source(self, tmp_path):
        path = write_config(tmp_path, "data: serie.csv\n")
        cfg = resolve(["bench", "--config", path, "--dataset", "austres"])
        assert cfg.dataset == "austres"
        assert cfg.data_path is None

    def test_file_with_two_sources(self, tmp_path):
        path = write_config(tmp_path, "data: serie.csv\ndataset: nottem\n")
        with pytest.raises(UsageError):
            resolve(["bench", "--config", path])

    def test_method_args_are_merged(self, tmp_path):
        path = write_config(
            tmp_path, "method_args:\n  na.mean:\n    option: median\n  na.random:\n    seed: 4\n"
        )
        cfg = resolve(
            ["bench", "--config", path, "--method-arg", "na.mean:option=mode"]
        )
        assert cfg.method_args == {"na.mean": {"option": "mode"}, "na.random": {"seed": "4"}}

    def test_external_methods_are_appended(self):
        cfg = resolve(
            [
                "bench",
                "--methods",
                "na.approx",
                "--external-method",
                f"ext={sys.executable} plugin.py",
            ]
        )
        assert cfg.methods == ["na.approx", "ext"]
        assert cfg.external_methods["ext"] == (sys.executable, "plugin.py")

    def test_external_metric(self):
        cfg = resolve(["bench", "--external-metric", "ext_rmse=metric --fast"])
        assert cfg.external_metrics == {"ext_rmse": ("metric", "--fast")}

    def test_percents(self, tmp_path):
        assert resolve(["impute"]).percents == [50.0]
        assert resolve(["impute", "--percent", "10", "--percent", "90"]).percents == [10.0, 90.0]
        path = write_config(tmp_path, "percent: [20, 80]\n")
        assert resolve(["sample", "--config", path]).percents == [20.0, 80.0]

    @pytest.mark.parametrize("argv", [["bench", "--jobs", "0"], ["bench", "--timeout", "0"]])
    def test_invalid_values(self, argv):
        with pytest.raises(UsageError):
            resolve(argv)

    @pytest.mark.parametrize(
        "content", ["repetition: deux\n", "blckper: 3\n", "repetition: 2.5\n"]
    )
    def test_invalid_file_values(self, tmp_path, content):
        with pytest.raises(UsageError):
            resolve(["bench", "--config", write_config(tmp_path, content)])

    def test_output_fields(self):
        cfg = resolve(["bench", "-o", "prof.json", "--svg", "prof.svg", "--quiet"])
        assert cfg.output == "prof.json"
        assert cfg.svg == "prof.svg"
        assert cfg.quiet is True
