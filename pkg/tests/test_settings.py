"""Tests for environment configuration."""

import logging

import pytest

from utils.settings import (
    DEFAULT_LOG_LEVEL,
    DEFAULT_ORDER,
    configure_logging,
    get_default_order,
    get_log_level,
    get_max_precision_retries,
    get_precision_slack,
)


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("BRACKET_DEFAULT_ORDER", "BRACKET_PRECISION_SLACK", "BRACKET_MAX_PRECISION_RETRIES", "BRACKET_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)


def test_defaults():
    assert get_default_order() == DEFAULT_ORDER
    assert get_log_level() == DEFAULT_LOG_LEVEL


def test_overrides(monkeypatch):
    monkeypatch.setenv("BRACKET_DEFAULT_ORDER", "5")
    monkeypatch.setenv("BRACKET_PRECISION_SLACK", "0")
    monkeypatch.setenv("BRACKET_MAX_PRECISION_RETRIES", "2")
    monkeypatch.setenv("BRACKET_LOG_LEVEL", "debug")
    assert get_default_order() == 5
    assert get_precision_slack() == 0
    assert get_max_precision_retries() == 2
    assert get_log_level() == "DEBUG"


@pytest.mark.parametrize("raw", ["abc", "-3", "2.5"])
def test_invalid_integers_fall_back(monkeypatch, caplog, raw):
    monkeypatch.setenv("BRACKET_DEFAULT_ORDER", raw)
    with caplog.at_level(logging.WARNING, logger="utils.settings"):
        assert get_default_order() == DEFAULT_ORDER
    assert "BRACKET_DEFAULT_ORDER" in caplog.text


def test_unknown_log_level(monkeypatch):
    monkeypatch.setenv("BRACKET_LOG_LEVEL", "chatty")
    assert get_log_level() == DEFAULT_LOG_LEVEL


def test_configure_logging_installs_one_handler():
    root = logging.getLogger()
    configure_logging("INFO")
    configure_logging("DEBUG")
    ours = [h for h in root.handlers if getattr(h, "_bracket_series", False)]
    assert len(ours) == 1
    assert root.level == logging.DEBUG
    for handler in ours:
        root.removeHandler(handler)
    root.setLevel(logging.WARNING)
