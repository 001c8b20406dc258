"""
Configuration management for foliation-kit.
"""

import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings

load_dotenv()

REPO_ROOT = Path(__file__).resolve().parent.parent


class AnalysisDefaults(BaseModel):
    """Bounds and seeds used when a command does not set its own."""
    truncation_order: int = Field(default_factory=lambda: int(os.getenv("FOLKIT_ORDER", "8")))
    resonance_bound: int = Field(default_factory=lambda: int(os.getenv("FOLKIT_BOUND", "50")))
    sample_count: int = Field(default_factory=lambda: int(os.getenv("FOLKIT_SAMPLES", "20")))
    seed: int = Field(default_factory=lambda: int(os.getenv("FOLKIT_SEED", "0")))
    exceptional_cap: int = Field(default_factory=lambda: int(os.getenv("FOLKIT_EXCEPTIONAL_CAP", "2")))
    parameter_range: int = Field(default_factory=lambda: int(os.getenv("FOLKIT_PARAMETER_RANGE", "9")))
    surface_degree_cap: int = Field(default_factory=lambda: int(os.getenv("FOLKIT_SURFACE_CAP", "2")))


class OutputConfig(BaseModel):
    """Report and log output."""
    format: str = Field(default_factory=lambda: os.getenv("FOLKIT_OUTPUT", "text"))
    log_level: str = Field(default_factory=lambda: os.getenv("LOG_LEVEL", "WARNING"))
    log_json: bool = Field(default_factory=lambda: os.getenv("FOLKIT_LOG_JSON", "false").lower() == "true")


class AppConfig(BaseSettings):
    """Main application configuration."""
    env: str = Field(default_factory=lambda: os.getenv("APP_ENV", "development"))
    corpus_dir: Path = Field(
        default_factory=lambda: Path(os.getenv("FOLKIT_CORPUS_DIR", str(REPO_ROOT / "corpus")))
    )

    # Sub-configurations
    analysis: AnalysisDefaults = Field(default_factory=AnalysisDefaults)
    output: OutputConfig = Field(default_factory=OutputConfig)

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        extra = "ignore"


# Global configuration instance
config = AppConfig()


def get_config() -> AppConfig:
    """Get the global configuration instance."""
    return config


def reload_config(env_file: Optional[str] = None) -> AppConfig:
    """Re-read the environment (tests set variables per case)."""
    global config
    if env_file:
        load_dotenv(env_file, override=True)
    config = AppConfig()
    return config
