import logging
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

DEFAULT_CONFIG_PATH = Path(__file__).with_name("config.yaml")

logger = logging.getLogger(__name__)


class Settings(BaseSettings):
    """Environment settings (RESINT_THREADS, RESINT_CONFIG, RESINT_LOG_LEVEL)"""

    model_config = SettingsConfigDict(env_prefix="RESINT_", extra="ignore")

    threads: int = Field(default=1, ge=1)
    config: Optional[Path] = None
    log_level: Optional[str] = None


class Config:
    def __init__(self, config_path: Optional[str] = None):
        """
        Load the YAML configuration.

        Args:
            config_path: Path to a YAML file; defaults to RESINT_CONFIG, then
                         to the packaged config.yaml
        """
        if config_path is None:
            config_path = Settings().config or DEFAULT_CONFIG_PATH
        self.config_path = Path(config_path)
        self.config_data = self._load_config()

    def _load_config(self) -> Dict[Any, Any]:
        """Load configuration from YAML file"""
        with open(self.config_path, 'r', encoding='utf-8') as file:
            return yaml.safe_load(file) or {}

    def get_logging_config(self) -> Dict[str, Any]:
        return self.config_data.get('logging', {})

    def get_quantities_config(self) -> Dict[str, Any]:
        return self.config_data.get('quantities', {})

    def get_bench_config(self) -> Dict[str, Any]:
        return self.config_data.get('bench', {})

    def get_normalform_config(self) -> Dict[str, Any]:
        return self.config_data.get('normalform', {})

    def get_conditions_config(self) -> Dict[str, Any]:
        return self.config_data.get('conditions', {})


def set_logging(level: str = "INFO") -> None:
    logging.basicConfig(format='%(levelname)s\t%(message)s', force=True)
    logging.getLogger("resint").setLevel(level)
    logger.debug(f"Log level set to {level}")
