"""
Configuration settings for lambda-theories
"""

from pathlib import Path

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings with environment variable support"""

    model_config = SettingsConfigDict(
        env_file=[".env.test", ".env"],
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Reduction
    default_fuel: int = Field(default=10_000, gt=0)
    default_seed: int = 0
    eta_mode: bool = False
    max_term_size: int = Field(default=5_000, gt=0)

    # Random generation
    random_term_size: int = Field(default=25, ge=1)

    # Suite sample sizes
    clone_samples: int = Field(default=500, ge=1)
    interpreter_samples: int = Field(default=1_000, ge=1)
    representation_samples: int = Field(default=200, ge=1)
    round_trip_maps: int = Field(default=50, ge=1)
    round_trip_pairs: int = Field(default=10, ge=1)
    karoubi_samples: int = Field(default=4, ge=1)
    fundamental_samples: int = Field(default=200, ge=1)
    naturality_samples: int = Field(default=100, ge=1)

    # Logging Configuration
    log_level: str = "WARNING"
    log_format: str = "console"
    log_file: Path | None = None

    @field_validator("log_format")
    @classmethod
    def validate_log_format(cls, v: str) -> str:
        """Only console and json renderers are wired up"""
        value = v.lower()
        if value not in {"console", "json"}:
            raise ValueError("log_format must be 'console' or 'json'")
        return value

    @property
    def is_debug(self) -> bool:
        """Check if debug logging is enabled"""
        return self.log_level.upper() == "DEBUG"


def get_settings() -> Settings:
    """Get settings instance"""
    return Settings()
