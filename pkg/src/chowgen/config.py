"""Configuration management for chowgen."""

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional


@dataclass
class ChowgenConfig:
    """Configuration settings for chowgen.

    All behaviour is flag-driven; these values only supply defaults.
    """

    jobs: int = field(default_factory=lambda: min(4, os.cpu_count() or 4))
    r_max: int = 25
    series_degree: int = 40
    sweep_timeout: Optional[float] = None

    log_level: str = "WARNING"
    log_file: Optional[Path] = None

    def __post_init__(self):
        if isinstance(self.log_file, str):
            self.log_file = Path(self.log_file)

        if self.jobs < 1:
            raise ValueError(f"jobs must be at least 1, got {self.jobs}")

        if self.r_max < 1:
            raise ValueError(f"r_max must be at least 1, got {self.r_max}")

        if self.sweep_timeout is not None and self.sweep_timeout <= 0:
            raise ValueError(f"sweep_timeout must be positive, got {self.sweep_timeout}")

    @classmethod
    def from_env(cls) -> "ChowgenConfig":
        """Load configuration from environment variables."""
        return cls(
            jobs=int(os.environ.get("CHOWGEN_JOBS", min(4, os.cpu_count() or 4))),
            r_max=int(os.environ.get("CHOWGEN_R_MAX", 25)),
            series_degree=int(os.environ.get("CHOWGEN_SERIES_DEGREE", 40)),
            sweep_timeout=float(t) if (t := os.environ.get("CHOWGEN_SWEEP_TIMEOUT")) else None,
            log_level=os.environ.get("CHOWGEN_LOG_LEVEL", "WARNING"),
            log_file=Path(p) if (p := os.environ.get("CHOWGEN_LOG_FILE")) else None,
        )


config = ChowgenConfig.from_env()
