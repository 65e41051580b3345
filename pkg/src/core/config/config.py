import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel

load_dotenv(override=False)


def _env_int(name: str) -> Optional[int]:
    value = os.getenv(name, "").strip()
    return int(value) if value else None


class AppConfig(BaseModel):
    """Process-level settings taken from the environment (and a .env file)."""

    log_level: str = "INFO"
    # Caps the day worker pool; unset means one worker per CPU
    threads: int = 1
    output_dir: str = "output"

    @classmethod
    def from_env(cls) -> "AppConfig":
        threads = _env_int("BOUNCE_LAB_THREADS") or os.cpu_count() or 1
        return cls(
            log_level=os.getenv("LOG_LEVEL", "INFO"),
            threads=max(1, threads),
            output_dir=os.getenv("BOUNCE_LAB_OUTPUT", "output"),
        )


config = AppConfig.from_env()
