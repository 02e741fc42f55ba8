"""Runtime configuration: enumeration bounds, search depths, cache location."""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

from .errors import PomaError

DEFAULT_ENUM_BOUNDS = {"PMA": 6, "PK4": 6, "PS4": 8}


def default_cache_dir() -> Path:
    env = os.environ.get("POMA_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "poma"


@dataclass
class Config:
    enumeration_bounds: dict = field(default_factory=lambda: dict(DEFAULT_ENUM_BOUNDS))
    free_rank_bound: int = 2
    term_depth_bound: int = 4
    cache_directory: Path = field(default_factory=default_cache_dir)
    output_format: str = "text"          # text | json | dot

    def __post_init__(self):
        if self.free_rank_bound < 1 or self.term_depth_bound < 1:
            raise PomaError("bounds must be >= 1")
        for kind, bound in self.enumeration_bounds.items():
            if bound < 1:
                raise PomaError(f"enumeration bound for {kind} must be >= 1")
        self.cache_directory = Path(self.cache_directory)
