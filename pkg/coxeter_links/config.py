"""
Runtime configuration for the Coxeter links toolkit.

Values come from ``COXLINK_*`` environment variables with the defaults below;
command-line flags override individual fields.
"""

import os
from typing import Any, Dict

from pydantic import BaseModel, ConfigDict, Field


ENV_PREFIX = "COXLINK_"


class ToolkitConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    root_tolerance: float = Field(default=1e-10, gt=0)
    max_iterations: int = Field(default=200, ge=1)
    gate_tolerance: float = Field(default=1e-6, gt=0)
    lehmer_scan_cap: int = Field(default=7, ge=1)
    realize_budget: int = Field(default=5_000_000, ge=1)
    orderings_budget: int = Field(default=1_000_000, ge=1)
    induced_cycle_cap: int = Field(default=12, ge=3)
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls) -> "ToolkitConfig":
        """Build a configuration from ``COXLINK_*`` environment variables."""
        values: Dict[str, Any] = {}
        for name in cls.model_fields:
            raw = os.getenv(ENV_PREFIX + name.upper())
            if raw is not None:
                values[name] = raw
        return cls(**values)

    def with_overrides(self, **overrides: Any) -> "ToolkitConfig":
        """Copy with the non-``None`` overrides applied and re-validated."""
        update = {k: v for k, v in overrides.items() if v is not None}
        if not update:
            return self
        return type(self)(**{**self.model_dump(), **update})


DEFAULT_CONFIG = ToolkitConfig()
