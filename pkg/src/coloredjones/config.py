from __future__ import annotations

import os
from dataclasses import dataclass, field

from .bracket import DEFAULT_WIDTH_CAP

WIDTH_CAP_ENV = "COLOREDJONES_WIDTH_CAP"

# A = x^k with x = exp(2 pi i / 24); both give q = A^-4 = exp(2 pi i / 3)
ZETA3_BRANCHES = {"zeta6": 4, "alt": 22}
MINUS_ONE_EXPONENT = 3  # A = zeta_8, q = -1


def _default_jobs() -> int:
    return max(1, os.cpu_count() or 1)


@dataclass
class EngineConfig:
    width_cap: int = DEFAULT_WIDTH_CAP
    jobs: int = field(default_factory=_default_jobs)
    zeta3_branch: str = "zeta6"
    output_format: str = "plain"

    def __post_init__(self) -> None:
        if self.width_cap < 4:
            raise ValueError("width cap must be at least 4")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
        if self.zeta3_branch not in ZETA3_BRANCHES:
            raise ValueError(f"unknown zeta3 branch {self.zeta3_branch!r}")
        if self.output_format not in ("plain", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")

    @property
    def zeta3_exponent(self) -> int:
        return ZETA3_BRANCHES[self.zeta3_branch]

    @classmethod
    def from_env(cls, **overrides) -> EngineConfig:
        env = os.environ.get(WIDTH_CAP_ENV)
        if env is not None and "width_cap" not in overrides:
            try:
                overrides["width_cap"] = int(env)
            except ValueError as exc:
                raise ValueError(f"{WIDTH_CAP_ENV} must be an integer, got {env!r}") from exc
        return cls(**overrides)
