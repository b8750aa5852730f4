from typing import List, Optional

from pydantic import Field, field_validator, model_validator

from ..bases.base_model import GeomBaseModel
from ...utils.rng import resolve_seed


def default_delta_schedule() -> List[float]:
    """delta = 2^-1, 2^-2, ..., 2^-20."""
    return [2.0 ** -k for k in range(1, 21)]


class ProbeConfig(GeomBaseModel):
    """
    Sampling, tolerance and schedule settings shared by every checker.

    The seed falls back to the BANACH_GEOM_SEED environment variable, then 0.

    Examples:
        >>> cfg = ProbeConfig(seed=7, samples=100)
        >>> cfg.delta_schedule[:2]
        [0.5, 0.25]
    """
    samples: int = Field(10_000, alias="samples", ge=1)
    seed: Optional[int] = Field(None, alias="seed", validate_default=True)
    tol: float = Field(1e-9, alias="tol", gt=0)
    delta_schedule: List[float] = Field(default_factory=default_delta_schedule, alias="delta_schedule", min_length=1)

    grid_points: int = Field(1_000_000, alias="grid_points", ge=16)
    probe_grid_points: int = Field(4096, alias="probe_grid_points", ge=16)
    multistart: int = Field(64, alias="multistart", ge=1)
    daugavet_candidates: int = Field(1000, alias="daugavet_candidates", ge=1)
    eigen_threshold: float = Field(0.1, alias="eigen_threshold", gt=0)
    daugavet_tol: float = Field(1e-9, alias="daugavet_tol", gt=0)
    uniqueness_tol: float = Field(1e-6, alias="uniqueness_tol", gt=0)
    hs_functionals: int = Field(32, alias="hs_functionals", ge=1)
    sequence_length: int = Field(20, alias="sequence_length", ge=1)
    region_samples: int = Field(256, alias="region_samples", ge=1)

    @field_validator("seed", mode="after")
    @classmethod
    def fill_seed(cls, v):
        return resolve_seed(v)

    @model_validator(mode="after")
    def check_schedule(self):
        schedule = self.delta_schedule
        if any(d < 0 or d > 1 for d in schedule):
            raise ValueError("delta_schedule entries must lie in [0, 1]")
        if any(b >= a for a, b in zip(schedule, schedule[1:])):
            raise ValueError("delta_schedule must be strictly decreasing")
        return self

    @property
    def effective_seed(self) -> int:
        return int(self.seed)

    def with_overrides(self, **overrides) -> "ProbeConfig":
        """Copy with some fields replaced, validated again."""
        data = self.model_dump(by_alias=False, exclude={"entity_type"})
        data.update({k: v for k, v in overrides.items() if v is not None})
        return ProbeConfig.model_validate(data)
