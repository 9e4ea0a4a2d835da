from functools import lru_cache
from typing import List, Optional

from pydantic import field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_file=".env", case_sensitive=True)

    # API Settings
    API_V1_STR: str = "/api/v1"
    PROJECT_NAME: str = "relcat"
    API_PORT: int = 9000
    ENVIRONMENT: str = "development"

    # Model Settings
    RELCAT_SIZE_CAP: int = 6
    MAX_TABLE_SIZE: int = 250_000
    CHECK_SIZES: List[int] = [1, 2, 3]
    CHECK_MAX_VALUATIONS: int = 27

    # Theory Settings
    RANDOM_TERM_DEPTH: int = 2

    # Arithmetic Settings
    ARITH_EXACT_BITS: int = 4096
    ARITH_MODULI: List[int] = [
        2305843009213693951,
        1000000000000000009,
        1000000007,
    ]

    # Search Settings
    SCAN_ENUMERATION_LIMIT: int = 50_000
    SCAN_WORKERS: int = 1
    ISO_SEARCH_MAX_DEPTH: int = 3
    ISO_SEARCH_MAX_CANDIDATES: int = 20_000

    # Cache Settings
    CACHE_TTL: int = 300

    # Logging Settings
    LOG_LEVEL: str = "INFO"
    LOG_FORMAT: str = "text"
    LOG_FILE: Optional[str] = None

    @field_validator("RELCAT_SIZE_CAP", "CHECK_MAX_VALUATIONS", "SCAN_WORKERS")
    @classmethod
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("must be at least 1")
        return value

    @field_validator("LOG_FORMAT")
    @classmethod
    def _known_format(cls, value: str) -> str:
        if value not in ("text", "json"):
            raise ValueError("LOG_FORMAT must be 'text' or 'json'")
        return value

    @model_validator(mode="after")
    def _sizes_within_cap(self) -> "Settings":
        if not self.CHECK_SIZES:
            raise ValueError("CHECK_SIZES must not be empty")
        for size in self.CHECK_SIZES:
            if not 1 <= size <= self.RELCAT_SIZE_CAP:
                raise ValueError(
                    f"CHECK_SIZES entry {size} outside [1, {self.RELCAT_SIZE_CAP}]"
                )
        return self


@lru_cache()
def get_settings() -> Settings:
    return Settings()
