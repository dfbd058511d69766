"""Tests for environment-driven settings."""

import logging

from app import config


class TestSettings:
    """Invalid values fall back to the default with a warning on stderr."""

    def test_int_setting(self, monkeypatch):
        monkeypatch.setenv("PATH_LIMIT", "7")
        assert config._int_setting("PATH_LIMIT", 3) == 7
        monkeypatch.delenv("PATH_LIMIT")
        assert config._int_setting("PATH_LIMIT", 3) == 3

    def test_non_integer(self, monkeypatch, capsys, caplog):
        monkeypatch.setenv("PATH_LIMIT", "many")
        with caplog.at_level(logging.WARNING, logger="app.config"):
            assert config._int_setting("PATH_LIMIT", 3) == 3
        assert "not an integer" in caplog.text
        assert capsys.readouterr().out == ""

    def test_below_minimum(self, monkeypatch, caplog):
        monkeypatch.setenv("SOLUTION_LIMIT", "0")
        with caplog.at_level(logging.WARNING, logger="app.config"):
            assert config._int_setting("SOLUTION_LIMIT", 10) == 10
        assert "at least 1" in caplog.text

    def test_unknown_strategy(self, monkeypatch, capsys, caplog):
        monkeypatch.setenv("REACH_STRATEGY", "random")
        with caplog.at_level(logging.WARNING, logger="app.config"):
            assert config._choice_setting("REACH_STRATEGY", "bfs", ("bfs", "dfs")) == "bfs"
        assert "unknown REACH_STRATEGY 'random'" in caplog.text
        assert capsys.readouterr().out == ""

    def test_known_strategy(self, monkeypatch):
        monkeypatch.setenv("REACH_STRATEGY", "dfs")
        assert config._choice_setting("REACH_STRATEGY", "bfs", ("bfs", "dfs")) == "dfs"
