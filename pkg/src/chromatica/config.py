"""Runtime configuration: enumeration caps, output format, seed."""
from __future__ import annotations

import os
from dataclasses import dataclass, replace

ENV_MAX_N = "CHROMATICA_MAX_N"


@dataclass(frozen=True)
class Config:
    max_vertices: int = 10
    max_edges: int = 24
    output_format: str = "text"
    seed: int = 20181

    def __post_init__(self):
        if self.max_vertices < 1 or self.max_edges < 1:
            raise ValueError("caps must be positive")
        if self.output_format not in ("text", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")

    def with_(self, **changes) -> "Config":
        return replace(self, **changes)


def from_env(**overrides) -> Config:
    """Default config, with the vertex cap taken from the environment if set."""
    cfg = Config()
    raw = os.environ.get(ENV_MAX_N)
    if raw:
        cfg = cfg.with_(max_vertices=int(raw))
    return cfg.with_(**overrides) if overrides else cfg


_current = from_env()


def current() -> Config:
    return _current


def set_current(cfg: Config) -> None:
    global _current
    _current = cfg
