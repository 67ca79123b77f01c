"""
Runtime configuration.

Settings come from environment variables (optionally loaded from a `.env`
file). Nothing is required: the defaults reproduce the documented behaviour.
"""

import os
from functools import lru_cache
from typing import Literal

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, field_validator

from src.models import ConfigError


# Environment variable -> Settings field
ENV_VARS = {
    "LOG_LEVEL": "log_level",
    "LOG_DIR": "log_dir",
    "LOG_FORMAT": "log_format",
    "LOG_TO_FILE": "log_to_file",
    "TRANSVERSAL_ROUNDS_CAP_BASE": "rounds_cap_base",
    "TRANSVERSAL_ROUNDS_CAP_PER_N2": "rounds_cap_per_n2",
    "TRANSVERSAL_HALL_MAX_N": "hall_max_n",
    "TRANSVERSAL_GEN_MAX_RETRIES": "gen_max_retries",
    "TRANSVERSAL_BENCH_WORKERS": "bench_workers",
}


class Settings(BaseModel):
    """
    Validated configuration.

    Attributes:
        log_level: Minimum level for the console handler
        log_dir: Directory for rotating log files
        log_format: "text" or "json" for file logs
        log_to_file: Whether file handlers are attached
        rounds_cap_base: Constant term of the default resample cap
        rounds_cap_per_n2: Coefficient of n^2 in the default resample cap
        hall_max_n: Largest family the subset-enumeration oracle accepts
        gen_max_retries: Rejection-sampling attempts per generated set
        bench_workers: Worker processes for `bench` (1 = in-process)
    """

    model_config = {"frozen": True}

    log_level: str = "WARNING"
    log_dir: str = "logs"
    log_format: Literal["text", "json"] = "text"
    log_to_file: bool = False
    rounds_cap_base: int = Field(default=10_000, ge=0)
    rounds_cap_per_n2: int = Field(default=100, ge=0)
    hall_max_n: int = Field(default=20, ge=0)
    gen_max_retries: int = Field(default=1_000, ge=1)
    bench_workers: int = Field(default=1, ge=1)

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level {value!r}")
        return level

    @field_validator("log_format", mode="before")
    @classmethod
    def _lower_format(cls, value):
        return value.lower() if isinstance(value, str) else value


def load_settings() -> Settings:
    """
    Build Settings from the environment.

    Raises:
        ConfigError: If a variable holds an invalid value
    """
    load_dotenv()
    raw = {field: os.getenv(var) for var, field in ENV_VARS.items()}
    try:
        return Settings(**{k: v for k, v in raw.items() if v is not None})
    except ValidationError as exc:
        first = exc.errors()[0]
        field = str(first["loc"][0]) if first["loc"] else "?"
        variable = next((var for var, name in ENV_VARS.items() if name == field), field)
        raise ConfigError(
            f"invalid value for {variable}: {first['msg']}",
            details={"variable": variable},
        ) from exc


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Process-wide settings, loaded once."""
    return load_settings()
