import importlib
import os
from unittest.mock import patch

import pytest
from fastapi import FastAPI
from pydantic import ValidationError

from monoid_bench.checker.evaluator import Mode
from monoid_bench.config.config_manager import ConfigManager


def test_load_config_from_env():
    with patch.dict(os.environ, {
        'MONOID_SPEC': 'trace:x1,x2,x3;edges=x1-x3',
        'DEFAULT_BOUND': '5',
        'EVAL_MODE': 'exhaustive',
        'OUTPUT_FORMAT': 'lines',
        'WORKERS': '4',
        'REPORT_STORAGE_PATH': './test_reports'
    }):
        config = ConfigManager()
        assert config.monoid_spec == 'trace:x1,x2,x3;edges=x1-x3'
        assert config.default_bound == 5
        assert config.eval_mode is Mode.EXHAUSTIVE
        assert config.output_format == 'lines'
        assert config.workers == 4
        assert config.report_storage_path == './test_reports'


def test_defaults():
    with patch.dict(os.environ, {}, clear=True):
        config = ConfigManager()
        assert config.monoid_spec == 'free:x1,x2'
        assert config.default_bound == 4
        assert config.eval_mode is Mode.WITNESS
        assert config.output_format == 'text'
        assert config.max_domain == 200_000


def test_invalid_numeric_values():
    with patch.dict(os.environ, {'DEFAULT_BOUND': 'not_a_number'}):
        with pytest.raises(ValueError) as exc_info:
            ConfigManager()
        assert "Invalid numeric value" in str(exc_info.value)


def test_negative_bound():
    with patch.dict(os.environ, {'DEFAULT_BOUND': '-1'}):
        with pytest.raises(ValueError) as exc_info:
            ConfigManager()
        assert "Bound must be non-negative" in str(exc_info.value)


def test_invalid_mode():
    with patch.dict(os.environ, {'EVAL_MODE': 'sampling'}):
        with pytest.raises(ValueError) as exc_info:
            ConfigManager()
        assert "Invalid evaluation mode" in str(exc_info.value)


def test_invalid_output_format():
    with patch.dict(os.environ, {'OUTPUT_FORMAT': 'json'}):
        with pytest.raises(ValueError) as exc_info:
            ConfigManager()
        assert "Invalid output format" in str(exc_info.value)


def test_invalid_workers():
    with patch.dict(os.environ, {'WORKERS': '0'}):
        with pytest.raises(ValueError) as exc_info:
            ConfigManager()
        assert "workers must be positive" in str(exc_info.value)


def test_overrides_take_precedence():
    with patch.dict(os.environ, {'DEFAULT_BOUND': '3', 'MONOID_SPEC': 'free:x1,x2'}):
        settings = ConfigManager().workbench(bound=6, monoid=None, mode='exhaustive')
        assert settings.bound == 6
        assert settings.monoid == 'free:x1,x2'
        assert settings.mode is Mode.EXHAUSTIVE


def test_invalid_override():
    with patch.dict(os.environ, {}, clear=True):
        with pytest.raises(ValidationError):
            ConfigManager().workbench(workers=0)


def test_api_settings():
    with patch.dict(os.environ, {'API_HOST': '0.0.0.0', 'API_PORT': '9000', 'API_RELOAD': 'false'}):
        config = ConfigManager()
        assert config.api_host == '0.0.0.0'
        assert config.api_port == 9000
        assert config.api_reload is False


def test_invalid_api_port():
    with patch.dict(os.environ, {'API_PORT': '70000'}):
        with pytest.raises(ValueError) as exc_info:
            ConfigManager()
        assert "API port out of range" in str(exc_info.value)


def test_default_api_app_resolves():
    with patch.dict(os.environ, {}, clear=True):
        config = ConfigManager()
    assert config.api_port == 8000
    module, _, name = config.api_app.partition(':')
    assert isinstance(getattr(importlib.import_module(module), name), FastAPI)
