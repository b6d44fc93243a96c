"""
Engine configuration.

Defaults, overridden by PAINLEVE_WORKERS / PAINLEVE_LOG_LEVEL from the
environment, overridden in turn by CLI flags.
"""
from __future__ import annotations

import logging
import os
from dataclasses import dataclass, replace
from typing import Mapping, Optional

ENV_WORKERS = "PAINLEVE_WORKERS"
ENV_LOG_LEVEL = "PAINLEVE_LOG_LEVEL"

_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


class ConfigError(ValueError):
    """Raised for unusable configuration values"""


@dataclass(frozen=True)
class EngineConfig:
    workers: int = 1
    log_level: str = "WARNING"

    def __post_init__(self) -> None:
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")
        level = self.log_level.upper()
        if level not in _LEVELS:
            raise ConfigError(f"unknown log level {self.log_level!r}")
        object.__setattr__(self, "log_level", level)

    @property
    def level(self) -> int:
        return getattr(logging, self.log_level)

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "EngineConfig":
        env = os.environ if environ is None else environ
        config = cls()
        if env.get(ENV_WORKERS):
            try:
                config = replace(config, workers=int(env[ENV_WORKERS]))
            except ValueError as e:
                raise ConfigError(f"{ENV_WORKERS} must be an integer, got {env[ENV_WORKERS]!r}") from e
        if env.get(ENV_LOG_LEVEL):
            config = replace(config, log_level=env[ENV_LOG_LEVEL])
        return config

    def with_flags(self, workers: Optional[int] = None, verbose: bool = False) -> "EngineConfig":
        config = self
        if workers is not None:
            config = replace(config, workers=workers)
        if verbose:
            config = replace(config, log_level="DEBUG")
        return config
