"""
Application settings using Pydantic Settings
"""

from dotenv import load_dotenv
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# Load environment variables from .env file
load_dotenv()


class SolverSettings(BaseSettings):
    """Solver configuration"""

    default_epsilon: float = Field(
        default=0.1, description="User-facing epsilon when --epsilon is omitted"
    )
    threshold_scale: float = Field(
        default=1.0,
        ge=0.0,
        description="Multiplier on both phase-entry thresholds (tests lower it)",
    )
    check_invariants: bool = Field(
        default=False,
        description="Cross-check layer components from scratch after every modification",
    )
    max_wall_seconds: float | None = Field(
        default=None, description="Wall time limit for one solve"
    )

    model_config = SettingsConfigDict(env_prefix="MDST_SOLVER_", extra="allow")


class OracleSettings(BaseSettings):
    """Exact oracle configuration"""

    exact_max_n: int = Field(default=9, description="Hard cap for exact enumeration")
    sweep_max_n: int = Field(
        default=7,
        ge=2,
        le=7,
        description="Largest n used by the exhaustive small-graph sweep (graph atlas tops out at 7)",
    )

    model_config = SettingsConfigDict(env_prefix="MDST_ORACLE_", extra="allow")


class BenchSettings(BaseSettings):
    """Benchmark ladder configuration"""

    min_log_n: int = Field(default=12, description="Smallest ladder point is 2**min_log_n")
    max_log_n: int = Field(default=17, description="Largest ladder point is 2**max_log_n")
    avg_degree: float = Field(default=8.0, description="Average degree of ladder graphs")
    epsilon: float = Field(default=0.1, description="User epsilon for ladder runs")
    workers: int = Field(default=1, ge=1, description="Worker threads for the ladder")
    max_ratio: float = Field(
        default=2.5, description="Allowed wall-time ratio between consecutive doublings"
    )

    model_config = SettingsConfigDict(env_prefix="MDST_BENCH_", extra="allow")

    @field_validator("max_log_n")
    @classmethod
    def validate_ladder(cls, v, info):
        low = info.data.get("min_log_n", 0)
        if v < low:
            raise ValueError(f"max_log_n ({v}) must be >= min_log_n ({low})")
        return v


class DatabaseSettings(BaseSettings):
    """Bench history database configuration"""

    url: str = Field(default="sqlite:///./mdst_bench.db", description="Database URL")
    echo: bool = Field(default=False, description="Echo SQL queries")

    model_config = SettingsConfigDict(env_prefix="DB_", extra="allow")


class Settings(BaseSettings):
    """Main application settings"""

    debug: bool = Field(default=False, description="Debug mode")
    log_level: str = Field(default="INFO", description="Logging level")

    # Sub-settings
    solver: SolverSettings = Field(default_factory=SolverSettings)
    oracle: OracleSettings = Field(default_factory=OracleSettings)
    bench: BenchSettings = Field(default_factory=BenchSettings)
    database: DatabaseSettings = Field(default_factory=DatabaseSettings)

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",  # Ignore extra fields from .env
    )


# Global settings instance
settings = Settings()
