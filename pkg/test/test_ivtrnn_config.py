import logging
from pathlib import Path

import pytest

from ivtrnn_config import DEFAULT_PRECISION, MAX_PRECISION, MIN_PRECISION, OUTPUT_DIR, TEMPLATES_DIR, configure_logging, load_settings


@pytest.fixture(autouse=True)
def clean_env(monkeypatch, tmp_path):
    for name in ("IVTRNN_LOG_LEVEL", "IVTRNN_DISPLAY_PRECISION", "IVTRNN_TEMPLATES_DIR", "IVTRNN_OUTPUT_DIR"):
        # set-then-delete registers an undo, so values load_dotenv writes are dropped afterwards
        monkeypatch.setenv(name, "")
        monkeypatch.delenv(name)
    monkeypatch.chdir(tmp_path)


def test_defaults():
    settings = load_settings()
    assert settings.log_level == "WARNING"
    assert settings.display_precision == DEFAULT_PRECISION
    assert settings.templates_dir == TEMPLATES_DIR
    assert settings.output_dir == OUTPUT_DIR


def test_environment_overrides(monkeypatch, tmp_path):
    monkeypatch.setenv("IVTRNN_LOG_LEVEL", "debug")
    monkeypatch.setenv("IVTRNN_DISPLAY_PRECISION", "6")
    monkeypatch.setenv("IVTRNN_OUTPUT_DIR", str(tmp_path / "out"))
    settings = load_settings()
    assert settings.log_level == "DEBUG"
    assert settings.display_precision == 6
    assert settings.output_dir == str(tmp_path / "out")


def test_dotenv_file(tmp_path):
    (tmp_path / ".env").write_text("IVTRNN_TEMPLATES_DIR=/srv/templates\n")
    assert load_settings().templates_dir == Path("/srv/templates")


def test_bad_precision_falls_back(monkeypatch):
    monkeypatch.setenv("IVTRNN_DISPLAY_PRECISION", "four")
    assert load_settings().display_precision == DEFAULT_PRECISION


@pytest.mark.parametrize("raw", ["-1", "13", "20"])
def test_out_of_range_precision_falls_back(monkeypatch, raw):
    monkeypatch.setenv("IVTRNN_DISPLAY_PRECISION", raw)
    assert load_settings().display_precision == DEFAULT_PRECISION


def test_precision_bounds_are_accepted(monkeypatch):
    monkeypatch.setenv("IVTRNN_DISPLAY_PRECISION", str(MAX_PRECISION))
    assert load_settings().display_precision == MAX_PRECISION
    monkeypatch.setenv("IVTRNN_DISPLAY_PRECISION", str(MIN_PRECISION))
    assert load_settings().display_precision == MIN_PRECISION


def test_configure_logging_sets_root_level():
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    try:
        configure_logging("info")
        assert root.level == logging.INFO
        configure_logging("nonsense")
        assert root.level == logging.WARNING
    finally:
        root.handlers[:] = handlers
        root.setLevel(level)
