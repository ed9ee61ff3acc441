# tests/unit/test_orchestration/test_pipeline_executor.py
"""Tests pour pipeline_executor (routage et codes de sortie)."""

import logging
from unittest.mock import Mock, patch

import pytest

from src.core.exceptions import (
    BenchmarkCellError,
    DataError,
    PluginContractError,
    UsageError,
)
from src.models.entities.cli_config_entity import CliConfig
from src.orchestration.pipeline_executor import _set_log_level, execute_pipeline, run_cli


class TestExecutePipeline:
    """Tests du routage vers les sous-commandes."""

    @pytest.mark.parametrize("command", ["bench", "sample", "impute", "plot"])
    def test_routes_to_subcommand(self, command):
        mock_pipeline = Mock()
        with patch.dict("src.orchestration.pipeline_executor.PIPELINES", {command: mock_pipeline}):
            cfg = CliConfig(command=command)
            execute_pipeline(cfg)
        mock_pipeline.assert_called_once_with(cfg)


class TestSetLogLevel:
    def test_levels(self):
        root = logging.getLogger()
        previous = root.level
        try:
            _set_log_level(verbose=True, quiet=False)
            assert root.level == logging.DEBUG
            _set_log_level(verbose=False, quiet=True)
            assert root.level == logging.WARNING
            _set_log_level(verbose=False, quiet=False)
            assert root.level == logging.INFO
        finally:
            root.setLevel(previous)


class TestRunCli:
    """Tests de la traduction des erreurs en codes de sortie."""

    def test_success(self):
        with patch("src.orchestration.pipeline_executor.execute_pipeline") as mock_execute:
            assert run_cli(["bench"]) == 0
        assert mock_execute.call_args.args[0].command == "bench"

    def test_usage_error(self):
        assert run_cli(["bench", "--unknown-flag"]) == 1

    def test_help(self, capsys):
        assert run_cli(["--help"]) == 0
        assert "impute-bench" in capsys.readouterr().out

    @pytest.mark.parametrize(
        "error, code",
        [
            (UsageError("x"), 1),
            (DataError("x"), 2),
            (PluginContractError("x"), 3),
            (BenchmarkCellError(PluginContractError("x"), "ext", 0, 0, 10.0), 3),
            (BenchmarkCellError(DataError("x"), "na.mean", 1, 2, 20.0), 2),
            (RuntimeError("x"), 4),
        ],
    )
    def test_exit_codes(self, error, code):
        with patch("src.orchestration.pipeline_executor.execute_pipeline", side_effect=error):
            assert run_cli(["bench"]) == code
