"""
Cubic Coordinates - Configuration Module
Pydantic Settings for type-safe configuration management
"""

from functools import lru_cache
from pathlib import Path
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application Settings with validation"""

    # Application
    app_name: str = Field(default="Cubic Coordinates Toolkit")
    app_version: str = Field(default="1.0.0")
    debug: bool = Field(default=False)

    # Size caps for exhaustive commands
    enumeration_cap: int = Field(default=6, ge=1)
    shelling_cap: int = Field(default=4, ge=1)
    mobius_cap: int = Field(default=4, ge=1)

    # Enumeration cache
    cache_dir: str = Field(default="./.cache/cubic")
    cache_enabled: bool = Field(default=True)

    # Logging
    log_level: str = Field(default="INFO")
    log_file: Optional[str] = None

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = False

    @property
    def cache_path(self) -> Path:
        """Cache directory as a path"""
        return Path(self.cache_dir)

    def cap_for(self, command: str) -> int:
        """Return the size cap that applies to a command or check suite"""
        if command == "shelling":
            return self.shelling_cap
        if command == "mobius":
            return self.mobius_cap
        return self.enumeration_cap


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()


# Global settings instance
settings = get_settings()
