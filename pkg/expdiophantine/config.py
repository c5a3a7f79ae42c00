import logging
import os
import sys
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError

from expdiophantine.errors import ConfigError
from expdiophantine.models import OutputFormat

load_dotenv()

ENV_PREFIX = "EXPDIO_"

# Desk-scale defaults; every search finishes in seconds at these bounds
_ENV_FIELDS = {
    "log_level": "LOG_LEVEL",
    "output_format": "FORMAT",
    "pow2_a_max": "POW2_A_MAX",
    "odd_p_max": "ODD_P_MAX",
    "odd_a_max": "ODD_A_MAX",
    "t14_y_max": "T14_Y_MAX",
    "t14_a_max": "T14_A_MAX",
    "xc_y_max": "XC_Y_MAX",
    "xc_n_max": "XC_N_MAX",
    "r_max": "R_MAX",
    "convergents": "CONVERGENTS",
    "norm_rep_n_max": "NORM_REP_N_MAX",
}


class Settings(BaseModel):
    log_level: str = "WARNING"
    output_format: OutputFormat = OutputFormat.JSON
    pow2_a_max: int = Field(60, ge=2)
    odd_p_max: int = Field(100, ge=3)
    odd_a_max: int = Field(40, ge=2)
    t14_y_max: int = Field(50, ge=3)
    t14_a_max: int = Field(20, ge=2)
    xc_y_max: int = Field(200, ge=2)
    xc_n_max: int = Field(30, ge=2)
    r_max: int = Field(200, ge=3)
    convergents: int = Field(50, ge=1)
    norm_rep_n_max: int = Field(12, ge=1)


def load_settings() -> Settings:
    """Build settings from ``EXPDIO_*`` environment variables."""
    raw = {}
    for field, suffix in _ENV_FIELDS.items():
        value = os.getenv(ENV_PREFIX + suffix)
        if value is not None and value.strip():
            raw[field] = value.strip()
    if "log_level" in raw:
        raw["log_level"] = raw["log_level"].upper()
        if not isinstance(logging.getLevelName(raw["log_level"]), int):
            raise ConfigError(f"{ENV_PREFIX}LOG_LEVEL: unknown level {raw['log_level']!r}")
    try:
        return Settings(**raw)
    except ValidationError as e:
        first = e.errors()[0]
        name = _ENV_FIELDS[str(first["loc"][0])]
        raise ConfigError(f"{ENV_PREFIX}{name}: {first['msg']}") from e


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return load_settings()


def configure_logging(level: str) -> None:
    """Send log records to stderr; stdout carries only the report."""
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )
