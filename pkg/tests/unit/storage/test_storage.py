import os

import pandas as pd
import pytest

from monoid_bench.checker.report import VerificationReport
from monoid_bench.config.config_manager import ConfigManager
from monoid_bench.storage.local_storage import LocalStorage


@pytest.fixture
def test_data_path(tmp_path):
    return str(tmp_path / "test_reports")


@pytest.fixture
def local_storage(test_data_path, monkeypatch):
    monkeypatch.setenv('REPORT_STORAGE_PATH', test_data_path)
    config = ConfigManager()
    return LocalStorage(config)


@pytest.fixture
def report():
    return VerificationReport("trans", 4, [("FP", "x2.x1"), ("FN", "x1.x2")])


def test_local_storage_save_load(local_storage, report):
    path = local_storage.save('trans_run', report.to_frame())
    assert path.endswith('trans_run.pkl')

    loaded = local_storage.load('trans_run')
    assert isinstance(loaded, pd.DataFrame)
    restored = VerificationReport.from_frame(loaded)
    assert restored.name == "trans"
    assert restored.instances == 4
    assert restored.rows == report.rows


def test_local_storage_creates_directory(test_data_path, local_storage):
    assert os.path.isdir(test_data_path)


def test_local_storage_nonexistent_key(local_storage):
    with pytest.raises(KeyError):
        local_storage.load('nonexistent_key')
    assert not local_storage.exists('nonexistent_key')


def test_local_storage_invalid_name(local_storage, report):
    with pytest.raises(ValueError) as exc_info:
        local_storage.save('../outside', report.to_frame())
    assert "Invalid report name" in str(exc_info.value)


def test_local_storage_list_keys(local_storage, report):
    local_storage.save('test2', report.to_frame())
    local_storage.save('test1', report.to_frame())

    keys = local_storage.list_keys()
    assert keys == ['test1', 'test2']


def test_local_storage_delete(local_storage, report):
    local_storage.save('test_delete', report.to_frame())
    assert local_storage.exists('test_delete')

    assert local_storage.delete('test_delete')
    assert 'test_delete' not in local_storage.list_keys()
    assert not local_storage.delete('test_delete')


def test_local_storage_clear(local_storage, report):
    local_storage.save('test1', report.to_frame())
    local_storage.save('test2', report.to_frame())

    assert local_storage.clear()
    assert len(local_storage.list_keys()) == 0
