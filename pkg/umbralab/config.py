# Settings read from the environment (and an optional .env file)

import logging
import os
from typing import Optional

from dotenv import load_dotenv

from umbralab.errors import ConfigError

load_dotenv()


def _env_float(name: str) -> Optional[float]:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = float(raw)
    except ValueError:
        raise ConfigError(f"{name} must be a number, got {raw!r}")
    if not value > 0:
        raise ConfigError(f"{name} must be positive, got {raw!r}")
    return value


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")
    if value < 1:
        raise ConfigError(f"{name} must be at least 1, got {raw!r}")
    return value


def _env_log_level(name: str, default: str = "WARNING") -> int:
    raw = (os.getenv(name) or default).strip().upper()
    level = logging.getLevelName(raw)
    if not isinstance(level, int):
        raise ConfigError(f"{name} is not a logging level: {raw!r}")
    return level


# None means "use the route default"
TOL_ABS = _env_float("UMBRALAB_TOL_ABS")
TOL_REL = _env_float("UMBRALAB_TOL_REL")
WORKERS = _env_int("UMBRALAB_WORKERS", 4)
MAX_INTERVALS = _env_int("UMBRALAB_MAX_INTERVALS", 200)
LOG_LEVEL = _env_log_level("UMBRALAB_LOG_LEVEL")
