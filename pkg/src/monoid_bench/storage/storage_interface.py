from abc import ABC, abstractmethod

import pandas as pd


class StorageInterface(ABC):
    @abstractmethod
    def save(self, name: str, frame: pd.DataFrame) -> str:
        """Save a report frame under a name."""
        pass

    @abstractmethod
    def load(self, name: str) -> pd.DataFrame:
        """Load the report frame saved under a name."""
        pass

    @abstractmethod
    def exists(self, name: str) -> bool:
        """Check if a report is stored under the name."""
        pass

    @abstractmethod
    def list_keys(self) -> list[str]:
        """Names of all stored reports."""
        pass

    @abstractmethod
    def delete(self, name: str) -> bool:
        """Delete a stored report."""
        pass

    @abstractmethod
    def clear(self) -> bool:
        """Delete all stored reports."""
        pass
