"""Configuration management for Moving Planes."""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Numerical settings loaded from environment or .env file."""

    model_config = SettingsConfigDict(
        env_prefix="GA_",
        env_file=".env",
        env_file_encoding="utf-8",
    )

    # Tolerances
    tolerance: float = Field(default=1e-10, gt=0)
    null_cone_epsilon: float = Field(default=1e-12, gt=0)
    degenerate_epsilon: float = Field(default=1e-12, gt=0)
    unit_epsilon: float = Field(default=1e-12, gt=0)
    taylor_threshold: float = Field(default=1e-6, gt=0)

    # Verification
    default_seed: int = 42
    default_count: int = Field(default=1000, ge=1)
    series_terms: int = Field(default=30, ge=2)

    # Logging
    log_level: str = "WARNING"

    def scaled_tolerance(self, *magnitudes: float) -> float:
        """Tolerance scaled by the largest squared magnitude (never below 1)."""
        scale = max([1.0, *(m * m for m in magnitudes)])
        return self.tolerance * scale


# Global settings instance
settings = Settings()


def get_settings() -> Settings:
    """Get the global settings instance."""
    return settings
