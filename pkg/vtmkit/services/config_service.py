# Copyright The Volcano Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Configuration service for vtmkit.

Settings come from vtmkit.yaml (an explicit path or the working directory),
fall back to defaults, and can be overridden by environment variables.
"""

import logging
import os
from pathlib import Path
from typing import Optional

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator

logger = logging.getLogger(__name__)

CONFIG_FILE = "vtmkit.yaml"
ENV_CACHE_DIR = "VTMKIT_CACHE_DIR"
ENV_WORKERS = "VTMKIT_WORKERS"


def default_cache_dir() -> str:
    return str(Path.home() / ".cache" / "vtmkit")


class ToolkitConfig(BaseModel):
    """Pydantic model for toolkit settings."""

    cache_dir: str = Field(default_factory=default_cache_dir, description="Directory for memoized vtm prefixes")
    default_prefix: int = Field(10**6, description="vtm prefix length used when a command does not give one")
    residue_prefix: int = Field(10**6, description="vtm prefix length scanned for residue checks")

    kernel_compare_len: int = Field(1 << 12, description="Terms compared when merging kernel elements")
    kernel_verify_len: int = Field(1 << 20, description="Terms checked against the rebuilt automaton")

    state_ceiling: int = Field(10**6, description="Largest intermediate automaton the compiler may build")

    search_node_budget: int = Field(10**7, description="Node budget per subtree in first-mode morphism search")
    exhaustive_max_k: int = Field(13, description="Largest k allowed for exhaustive morphism search")

    workers: int = Field(1, description="Worker count for parallel scans and searches")

    @field_validator(
        'default_prefix',
        'residue_prefix',
        'kernel_compare_len',
        'kernel_verify_len',
        'state_ceiling',
        'search_node_budget',
        'workers',
    )
    @classmethod
    def validate_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"Value {v} must be a positive integer")
        return v

    @field_validator('exhaustive_max_k')
    @classmethod
    def validate_exhaustive_max_k(cls, v: int) -> int:
        if not (1 <= v <= 13):
            raise ValueError(f"exhaustive_max_k {v} is not in the valid range (1-13)")
        return v


class ConfigService:
    """Service for loading and saving toolkit configuration."""

    def __init__(self, verbose: bool = False) -> None:
        self.verbose = verbose

    def load_config(self, config_path: Optional[Path] = None, workspace_path: Optional[Path] = None) -> ToolkitConfig:
        """
        Load configuration.

        Args:
            config_path: Explicit YAML file; must exist when given
            workspace_path: Directory searched for vtmkit.yaml when no path is given

        Returns:
            ToolkitConfig: Validated configuration with environment overrides applied

        Raises:
            FileNotFoundError: If an explicit config file is missing
            ValueError: If the YAML or a setting is invalid
        """
        if config_path is not None:
            config_file = Path(config_path)
            if not config_file.exists():
                raise FileNotFoundError(f"Config file not found: {config_file}")
        else:
            config_file = Path(workspace_path or Path.cwd()) / CONFIG_FILE

        settings = {}
        if config_file.exists():
            if self.verbose:
                logger.debug(f"Loading config from: {config_file}")
            try:
                with open(config_file, 'r', encoding='utf-8') as f:
                    settings = yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                raise ValueError(f"Invalid YAML in config file: {e}")
            if not isinstance(settings, dict):
                raise ValueError(f"Config file {config_file} must hold a mapping")

        settings.update(self._environment_overrides())
        try:
            return ToolkitConfig(**settings)
        except ValidationError as e:
            raise ValueError(f"Invalid configuration: {e}")

    def _environment_overrides(self) -> dict:
        overrides = {}
        if os.environ.get(ENV_CACHE_DIR):
            overrides['cache_dir'] = os.environ[ENV_CACHE_DIR]
        if os.environ.get(ENV_WORKERS):
            try:
                overrides['workers'] = int(os.environ[ENV_WORKERS])
            except ValueError:
                raise ValueError(f"{ENV_WORKERS} must be an integer, got {os.environ[ENV_WORKERS]!r}")
        if overrides and self.verbose:
            logger.debug(f"Environment overrides: {overrides}")
        return overrides

    def save_config(self, config_path: Path, config: ToolkitConfig) -> None:
        if self.verbose:
            logger.debug(f"Saving config to: {config_path}")
        with open(config_path, 'w', encoding='utf-8') as f:
            yaml.dump(config.model_dump(exclude_none=True), f, default_flow_style=False, indent=2, sort_keys=False)
