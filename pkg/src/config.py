"""Configuration management for the hadamard-gorenstein command line.

Settings come only from command-line flags; there is no environment or .env
lookup. The validated settings object is cached per process so library
helpers and the logging setup see the same values.
"""

from typing import ClassVar, Optional

from pydantic import BaseModel, Field, field_validator


class Config(BaseModel):
    """Validated settings for one run."""

    # Logging Configuration
    LOG_LEVEL: str = Field(default="WARNING", description="Logging level")
    STRUCTURED_LOGGING: bool = Field(default=False, description="Emit JSON log lines")

    # Verification Configuration
    HF_DEGREE_CAP: int | None = Field(
        default=None,
        description="Highest degree tried when computing a Hilbert function (default: number of points)",
        ge=0,
    )

    # Construction Defaults
    DEFAULT_RATIOS: str = Field(
        default="1/1,1/2,1/3,1/4",
        description="Comma-separated alpha/beta pairs of the default configuration",
    )
    DEFAULT_INDEX_STEP: int = Field(default=2, description="Step of the default index sets 0, step, 2*step, ...", ge=2)

    @field_validator("LOG_LEVEL")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level value."""
        valid_levels = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}
        v_upper = v.upper()
        if v_upper not in valid_levels:
            raise ValueError(f"Log level must be one of {valid_levels}")
        return v_upper

    @field_validator("DEFAULT_RATIOS")
    @classmethod
    def validate_default_ratios(cls, v: str) -> str:
        """Require exactly four alpha/beta pairs."""
        pairs = [pair.strip() for pair in v.split(",") if pair.strip()]
        if len(pairs) != 4 or any(pair.count("/") != 1 for pair in pairs):
            raise ValueError("DEFAULT_RATIOS must list four alpha/beta pairs")
        return ",".join(pairs)

    @property
    def default_ratio_pairs(self) -> list[str]:
        """Parse the default ratios string into a list."""
        return self.DEFAULT_RATIOS.split(",")

    def default_index_set(self, size: int) -> list[int]:
        """The first size entries of 0, step, 2*step, ..."""
        return [self.DEFAULT_INDEX_STEP * k for k in range(size)]

    # Class variable to store the singleton instance
    # (using ClassVar to avoid Pydantic treating it as a field)
    _config_instance: ClassVar[Optional["Config"]] = None

    @classmethod
    def from_options(cls, **options) -> "Config":
        """Create the configuration from command-line options and cache it.

        Options left as None fall back to the field defaults.
        """
        cls._config_instance = cls(**{key: value for key, value in options.items() if value is not None})
        return cls._config_instance

    @classmethod
    def current(cls) -> "Config":
        """The cached configuration, or the defaults when none was built yet."""
        if cls._config_instance is None:
            cls._config_instance = cls()
        return cls._config_instance

    @classmethod
    def reset(cls) -> None:
        cls._config_instance = None
