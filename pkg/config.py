from enum import Enum

from pydantic_settings import BaseSettings, SettingsConfigDict


class KernelKind(str, Enum):
    POINT = "point"
    ERF = "erf"


class Settings(BaseSettings):
    # Logging
    LOG_LEVEL: str = "INFO"
    # Integration
    RK4_STEPS: int = 4096
    RK4_MAX_STEPS: int = 2_000_000
    RK4_MAX_STEP_PHASE: float = 0.05
    # Sweeps
    SWEEP_WORKERS: int = 1
    DEFAULT_PRESET: str = "setA"
    DEFAULT_KERNEL: KernelKind = KernelKind.POINT
    CSV_SIGNIFICANT_DIGITS: int = 17
    NEGATIVITY_THRESHOLD: float = 0.01
    THRESHOLD_SEARCH_MIN_KG: float = 1e-80
    THRESHOLD_SEARCH_MAX_KG: float = 1e10
    # Published reference values, reported next to the computed ones
    PUBLISHED_CROSSOVER_KG: float = 1e-27
    PUBLISHED_THRESHOLD_MODEL_I_KG: float = 1e-23
    PUBLISHED_THRESHOLD_MODEL_II_KG: float = 1e-31

    model_config = SettingsConfigDict(env_file=".env", env_prefix="GRAVQUBIT_")

settings = Settings()
