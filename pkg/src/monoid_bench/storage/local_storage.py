import logging
import re
from pathlib import Path

import pandas as pd

from monoid_bench.config.config_manager import ConfigManager
from monoid_bench.storage.storage_interface import StorageInterface

logger = logging.getLogger(__name__)

_NAME = re.compile(r"^[A-Za-z0-9][A-Za-z0-9_.-]*$")
_SUFFIX = ".pkl"


class LocalStorage(StorageInterface):
    """Verification reports pickled as DataFrames under REPORT_STORAGE_PATH."""

    def __init__(self, config: ConfigManager):
        self.base_path = Path(config.report_storage_path)
        self.base_path.mkdir(parents=True, exist_ok=True)

    def _path(self, name: str) -> Path:
        if not _NAME.match(name):
            raise ValueError(f"Invalid report name: {name}")
        return self.base_path / f"{name}{_SUFFIX}"

    def save(self, name: str, frame: pd.DataFrame) -> str:
        """Save a report frame.

        Args:
            name: Report name (letters, digits, '_', '.', '-')
            frame: Report rows; attrs carry the suite name, instance count and scope

        Returns:
            str: Full path where the report was saved
        """
        full_path = self._path(name)
        frame.to_pickle(full_path)
        logger.info("Saved report %s to %s", name, full_path)
        return str(full_path)

    def load(self, name: str) -> pd.DataFrame:
        """Load a report frame.

        Raises:
            KeyError: If no report has that name
        """
        full_path = self._path(name)
        if not full_path.exists():
            raise KeyError(f"Key not found: {name}")
        return pd.read_pickle(full_path)

    def exists(self, name: str) -> bool:
        return self._path(name).exists()

    def list_keys(self) -> list[str]:
        return sorted(p.name[:-len(_SUFFIX)] for p in self.base_path.glob(f"*{_SUFFIX}")
                      if p.is_file())

    def delete(self, name: str) -> bool:
        full_path = self._path(name)
        if not full_path.exists():
            return False
        try:
            full_path.unlink()
            return True
        except OSError:
            return False

    def clear(self) -> bool:
        try:
            for file in self.base_path.glob(f"*{_SUFFIX}"):
                if file.is_file():
                    file.unlink()
            return True
        except OSError:
            return False
