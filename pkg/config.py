"""
Central configuration module for satlab.
Loads environment variables and exposes a Config dataclass with validated settings.
"""

import os
from dataclasses import dataclass, field

from dotenv import load_dotenv

# Load .env file
load_dotenv()


@dataclass
class Config:
    """Application configuration loaded from environment variables."""

    # Storage
    cache_path: str = field(default_factory=lambda: os.getenv("SATLAB_CACHE", ".satlab/cache.jsonl"))
    reports_dir: str = field(default_factory=lambda: os.getenv("SATLAB_REPORTS_DIR", "reports"))

    # Logging
    log_level: str = field(default_factory=lambda: os.getenv("LOG_LEVEL", "INFO"))
    log_file: str = field(default_factory=lambda: os.getenv("SATLAB_LOG_FILE", ""))

    # Search
    workers: int = field(default_factory=lambda: int(os.getenv("SATLAB_WORKERS", "1")))
    max_vertices: int = field(default_factory=lambda: int(os.getenv("SATLAB_MAX_VERTICES", "9")))
    max_free_vertices: int = field(default_factory=lambda: int(os.getenv("SATLAB_MAX_FREE_VERTICES", "12")))
    max_edges: int = field(default_factory=lambda: int(os.getenv("SATLAB_MAX_EDGES", "36")))
    max_candidates: int = field(default_factory=lambda: int(os.getenv("SATLAB_MAX_CANDIDATES", "10000000")))
    max_clique_nodes: int = field(default_factory=lambda: int(os.getenv("SATLAB_MAX_CLIQUE_NODES", "10000000")))
    wall_time_cap: float = field(default_factory=lambda: float(os.getenv("SATLAB_WALL_TIME", "600")))

    def validate(self) -> None:
        """
        Validate every setting.
        Raises ValueError listing all problems at once.
        """
        errors = []

        if self.log_level.upper() not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            errors.append(f"Invalid LOG_LEVEL: {self.log_level}")
        if not self.cache_path:
            errors.append("SATLAB_CACHE must not be empty")
        if not self.reports_dir:
            errors.append("SATLAB_REPORTS_DIR must not be empty")

        if self.workers <= 0:
            errors.append("workers must be positive")
        for name in ("max_vertices", "max_free_vertices", "max_edges", "max_candidates", "max_clique_nodes"):
            if getattr(self, name) <= 0:
                errors.append(f"{name} must be positive")
        if self.wall_time_cap <= 0:
            errors.append("wall_time_cap must be positive")

        if errors:
            raise ValueError("Configuration validation failed:\n" + "\n".join(f"  - {e}" for e in errors))

