"""
Environment-driven settings for Meshtura.

Values come from MESHTURA_* environment variables (or a .env file) and act
as defaults that command-line flags override.
"""

from pathlib import Path
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from meshtura.core.models import AnalysisOptions, EdgeWeighting


class MeshturaSettings(BaseSettings):
    """Process-wide defaults."""

    model_config = SettingsConfigDict(env_prefix="MESHTURA_", env_file=".env", extra="ignore")

    log_level: str = "WARNING"
    workers: int = Field(default=4, ge=1)
    default_seed: int = 0
    default_trials: int = Field(default=1, ge=1)
    edge_weighting: EdgeWeighting = EdgeWeighting.AUTO
    audit_dir: Optional[Path] = None

    def analysis_options(self, **overrides) -> AnalysisOptions:
        """AnalysisOptions seeded from these settings; None overrides are ignored."""
        values = {
            "seed": self.default_seed,
            "trials": self.default_trials,
            "edge_weighting": self.edge_weighting,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return AnalysisOptions(**values)
