"""Application configuration"""
from pydantic import Field
from pydantic_settings import BaseSettings
from typing import Optional
from pathlib import Path


class Settings(BaseSettings):
    """Application settings loaded from environment variables"""

    # Application
    PROJECT_NAME: str = "netdisrupt"
    DEBUG: bool = False
    LOG_LEVEL: Optional[str] = None

    # File locations
    DATA_DIR: str = "./data"
    LOG_DIR: str = "./logs"
    # Default output directory of `netdisrupt run`
    NETDISRUPT_OUTPUT_DIR: str = "./results"

    # Simulation defaults
    DEFAULT_REPLICATIONS: int = Field(default=30, ge=1)
    DEFAULT_SEED: int = 42
    DISMANTLING_THRESHOLD: float = Field(default=0.25, gt=0.0)
    # Scores equal after rounding to this many decimals count as tied
    TIE_DECIMALS: int = Field(default=9, ge=0)

    # Brute-force betweenness refuses graphs above this size
    BRUTEFORCE_MAX_NODES: int = Field(default=64, ge=1)

    # Public deposit holding the raw Montagna edge lists
    MONTAGNA_RECORD_URL: str = "https://zenodo.org/api/records/3938818"
    HTTP_TIMEOUT: float = Field(default=60.0, gt=0.0)

    # Dataset admission of actors that appear only in the attribute file
    ALLOW_ISOLATED_NODES: bool = False

    # Process pool size for experiment cells (1 = serial)
    MAX_WORKERS: int = Field(default=1, ge=1)

    @property
    def data_path(self) -> Path:
        return Path(self.DATA_DIR)

    @property
    def output_path(self) -> Path:
        return Path(self.NETDISRUPT_OUTPUT_DIR)

    @property
    def LOG_LEVEL_RESOLVED(self) -> str:
        return self.LOG_LEVEL or ("DEBUG" if self.DEBUG else "INFO")

    class Config:
        env_file = ".env"
        case_sensitive = True
        extra = "ignore"  # Ignore extra fields in .env that aren't defined in Settings


# Global settings instance
settings = Settings()
