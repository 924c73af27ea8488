"""App-wide configuration and environment settings."""

import os

from dotenv import load_dotenv

load_dotenv()  # Load from .env file


def get_setting(key, default=None):
    """Read a setting from the environment, falling back to the default."""
    return os.getenv(key, default)


# Logging
LOG_LEVEL = get_setting("SQROOT_LOG_LEVEL", "WARNING").upper()
TRACE_STAGES = get_setting("SQROOT_TRACE", "false").lower() in ("true", "1")
TRACE_PROJECT = get_setting("SQROOT_TRACE_PROJECT", "square-roots")

# Oracle
ORACLE_BUDGET = int(get_setting("SQROOT_ORACLE_BUDGET", str(2**25)))

# Generators
GEN_MAX_RETRIES = int(get_setting("SQROOT_GEN_MAX_RETRIES", "16"))
GEN_MAX_RESAMPLES = int(get_setting("SQROOT_GEN_MAX_RESAMPLES", "1000"))

# Pipelines
MAX_STEPS_GUARD = 25  # Hard terminate if exceeded

# CLI
DEFAULT_FORMAT = "edgelist"
