import copy
import logging
import os
import platform
from typing import Any, Dict, Optional

import yaml

DEFAULTS: Dict[str, Any] = {
    'oracle': {
        'max_n': 16,
        'jobs': 1,
    },
    'output': {
        'json_indent': None,
    },
    'logging': {
        'level': 'WARNING',
        'file': '',
    },
}


def _merge(base: Dict[str, Any], overlay: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in overlay.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class ConfigManager:
    """
    Manages configuration loading and the user data directory.
    Built-in defaults < bundled config/config.yaml < user config.yaml.
    """

    def __init__(self, config_dir: Optional[str] = None, config_path: Optional[str] = None):
        self.config_dir = config_dir or self.get_app_data_dir()
        self.config_path = config_path or os.path.join(self.config_dir, 'config.yaml')
        self.logger = logging.getLogger(__name__)

    @staticmethod
    def get_app_data_dir() -> str:
        """
        Returns the platform-specific application data directory.
        On macOS: ~/Library/Application Support/RainbowSched
        """
        home = os.path.expanduser("~")
        if platform.system() == "Darwin":
            return os.path.join(home, "Library", "Application Support", "RainbowSched")
        return os.path.join(home, ".rainbowsched")

    @staticmethod
    def bundled_config_path() -> str:
        # src/config_manager.py -> ../config
        return os.path.join(os.path.dirname(os.path.dirname(__file__)), 'config', 'config.yaml')

    def _read_yaml(self, path: str) -> Dict[str, Any]:
        if not os.path.exists(path):
            return {}
        try:
            with open(path, 'r') as f:
                data = yaml.safe_load(f) or {}
        except (OSError, yaml.YAMLError) as e:
            self.logger.warning(f"Ignoring unreadable config {path}: {e}")
            return {}
        if not isinstance(data, dict):
            self.logger.warning(f"Ignoring config {path}: top level is not a mapping")
            return {}
        return data

    def load_config(self) -> Dict[str, Any]:
        """
        Load the layered configuration. Missing or malformed files contribute
        nothing; the result always contains every default key.
        """
        config = _merge(DEFAULTS, self._read_yaml(self.bundled_config_path()))
        return _merge(config, self._read_yaml(self.config_path))

