import logging
import os
from dataclasses import dataclass
from typing import Literal, Optional

from pydantic import BaseModel, Field

from monoid_bench.checker.evaluator import Mode

OutputFormat = Literal['text', 'lines']


@dataclass
class ConfigManager:
    """Configuration manager for the workbench."""
    monoid_spec: str
    default_bound: int
    eval_mode: Mode
    output_format: OutputFormat
    workers: int
    max_domain: int
    report_storage_path: str
    log_level: str
    log_format: str
    api_app: str
    api_host: str
    api_port: int
    api_reload: bool

    def __init__(self):
        """Initialize configuration from environment variables."""
        self.monoid_spec = self._get_str('MONOID_SPEC', 'free:x1,x2')

        # Validate bound must be non-negative
        bound = self._get_int('DEFAULT_BOUND', 4)
        if bound < 0:
            raise ValueError("Bound must be non-negative")
        self.default_bound = bound

        self.eval_mode = self._get_mode()
        self.output_format = self._get_output_format()

        workers = self._get_int('WORKERS', 1)
        if workers < 1:
            raise ValueError("Number of workers must be positive")
        self.workers = workers

        max_domain = self._get_int('MAX_DOMAIN', 200_000)
        if max_domain < 1:
            raise ValueError("Maximum domain size must be positive")
        self.max_domain = max_domain

        self.report_storage_path = self._get_str('REPORT_STORAGE_PATH', './reports')
        self.log_level = self._get_str('LOG_LEVEL', 'INFO')
        self.log_format = self._get_str('LOG_FORMAT',
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s')

        self.api_app = self._get_str('API_APP', 'monoid_bench.api.app:app')
        self.api_host = self._get_str('API_HOST', '127.0.0.1')
        port = self._get_int('API_PORT', 8000)
        if not 0 < port < 65536:
            raise ValueError(f"API port out of range: {port}")
        self.api_port = port
        self.api_reload = self._get_str('API_RELOAD', 'true').lower() in ('true', '1', 'yes')

    def _get_mode(self) -> Mode:
        """Get and validate evaluation mode from environment."""
        mode = self._get_str('EVAL_MODE', 'witness').lower()
        if mode not in ('exhaustive', 'witness'):
            raise ValueError(f"Invalid evaluation mode: {mode}")
        return Mode(mode)

    def _get_output_format(self) -> OutputFormat:
        output_format = self._get_str('OUTPUT_FORMAT', 'text').lower()
        if output_format not in ('text', 'lines'):
            raise ValueError(f"Invalid output format: {output_format}")
        return output_format  # type: ignore[return-value]

    def _get_str(self, key: str, default: str) -> str:
        """Get optional string value from environment."""
        return os.getenv(key, default)

    def _get_int(self, key: str, default: int) -> int:
        """Get optional integer value from environment."""
        value = os.getenv(key)
        if value is None:
            return default
        try:
            return int(value)
        except ValueError:
            raise ValueError(f"Invalid numeric value for {key}: {value}")

    def workbench(self, **overrides: object) -> 'WorkbenchConfig':
        """The validated settings, with command-line flags taking precedence."""
        values = {
            'monoid': self.monoid_spec,
            'bound': self.default_bound,
            'mode': self.eval_mode,
            'output_format': self.output_format,
            'workers': self.workers,
            'max_domain': self.max_domain,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return WorkbenchConfig(**values)


class WorkbenchConfig(BaseModel):
    """Settings one command runs with."""
    monoid: str = Field('free:x1,x2', description="Monoid spec, e.g. free:x1,x2")
    bound: int = Field(4, ge=0, description="Quantifier bound")
    mode: Mode = Field(Mode.WITNESS, description="Evaluation mode")
    output_format: OutputFormat = Field('text', description="text or lines")
    workers: int = Field(1, ge=1, description="Worker threads for verification")
    max_domain: int = Field(200_000, ge=1, description="Largest unguarded quantifier domain")


def configure_logging(config: Optional[ConfigManager] = None) -> None:
    """Configure the root logger from LOG_LEVEL and LOG_FORMAT."""
    config = config or ConfigManager()
    logging.basicConfig(level=getattr(logging, config.log_level.upper(), logging.INFO),
                        format=config.log_format)
