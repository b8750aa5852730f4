import logging
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

import numpy as np
from pydantic import ConfigDict, Field, PrivateAttr, SerializeAsAny, field_validator, model_validator

from ..bases.base_model import GeomBaseModel
from ..enums.norm_kind_enum import NormKindEnum
from ..norm_families.base_norm_family import BaseNormFamily
from ..norm_families.norm_family_factory import create_norm_family
from ...utils.json_utils import load_json

logger = logging.getLogger(__name__)


class NormedSpace(GeomBaseModel):
    """
    The space (R^n, |.|) with the norm induced by a norm family.

    Immutable once built. Derived data that is expensive to recompute
    (polytope vertex sets, grids) is memoised in a private cache, which never
    changes the observable value of the space.

    Attributes:
        dim: dimension n of the space
        family: norm family inducing the norm
        tol: default tolerance for membership and equality tests
        label: optional catalogue label

    Examples:
        >>> space = NormedSpace.model_validate({"dim": 2, "family": {"kind": "lp", "p": "inf"}})
        >>> space.family.kind
        <NormKindEnum.LP: 'lp'>
        >>> space.is_polyhedral
        True
    """
    model_config = ConfigDict(populate_by_name=True, arbitrary_types_allowed=True, frozen=True)

    dim: int = Field(..., alias="dim", gt=0)
    family: SerializeAsAny[BaseNormFamily] = Field(..., alias="family")
    tol: float = Field(1e-9, alias="tol", gt=0)
    label: Optional[str] = Field(None, alias="label")

    _cache: Dict[str, Any] = PrivateAttr(default_factory=dict)

    @field_validator("family", mode="before")
    @classmethod
    def build_family(cls, v):
        if isinstance(v, BaseNormFamily):
            return v
        if isinstance(v, dict):
            if "kind" not in v:
                raise ValueError("family descriptor needs a 'kind'")
            params = {k: val for k, val in v.items() if k != "kind"}
            return create_norm_family(v["kind"], params)
        raise ValueError(f"family must be a descriptor dict or a norm family, got {type(v).__name__}")

    @model_validator(mode="after")
    def check_family_dimension(self):
        self.family.validate_dimension(self.dim)
        return self

    # -- descriptors -----------------------------------------------------------------

    def to_descriptor(self) -> Dict[str, Any]:
        """JSON descriptor {"dim": n, "family": {"kind": ..., ...}} this space parses from."""
        return {"dim": self.dim, "family": self.family.to_descriptor()}

    @classmethod
    def from_descriptor(cls, descriptor: Dict[str, Any], label: Optional[str] = None) -> "NormedSpace":
        data = dict(descriptor)
        if label is not None:
            data["label"] = label
        return cls.model_validate(data)

    @classmethod
    def from_json(cls, path: Union[str, Path]) -> Tuple[Optional["NormedSpace"], List[Exception]]:
        """Load a space descriptor file; returns (space, errors) like from_dict."""
        try:
            data = load_json(path)
        except (OSError, ValueError) as e:
            return None, [Exception(f"Error reading {path}: {e}")]
        return cls.from_dict(data)

    # -- cached derived data ---------------------------------------------------------

    def cached(self, key: str, factory: Callable[[], Any]) -> Any:
        if key not in self._cache:
            self._cache[key] = factory()
        return self._cache[key]

    @property
    def kind(self) -> NormKindEnum:
        return self.family.kind

    @property
    def is_polyhedral(self) -> bool:
        return bool(self.family.is_polyhedral(self.dim))

    @property
    def ball_vertices(self) -> Optional[np.ndarray]:
        if not self.is_polyhedral:
            return None
        return self.cached("ball_vertices", lambda: self.family.ball_vertices(self.dim))

    @property
    def facet_normals(self) -> Optional[np.ndarray]:
        if not self.is_polyhedral:
            return None
        return self.cached("facet_normals", lambda: self.family.facet_normals(self.dim))

    @property
    def is_euclidean(self) -> bool:
        return self.kind == NormKindEnum.LP and self.family.p == 2

    # -- row-wise evaluation -------------------------------------------------------

    def norms(self, X: np.ndarray) -> np.ndarray:
        """Norms of the rows of X."""
        return self.family.gauge(np.atleast_2d(np.asarray(X, dtype=float)))

    def dual_norms(self, F: np.ndarray) -> np.ndarray:
        """Dual norms of the rows of F."""
        return self.family.support(np.atleast_2d(np.asarray(F, dtype=float)))

    def describe(self) -> Dict[str, Any]:
        """Descriptor plus closed-form classification, as shown by `space info`."""
        info: Dict[str, Any] = {
            "label": self.label,
            "descriptor": self.to_descriptor(),
            "tol": self.tol,
            "polyhedral": self.is_polyhedral,
            "rotund": self.family.is_rotund(self.dim),
            "smooth": self.family.is_smooth(self.dim),
        }
        if self.is_polyhedral:
            info["ball_vertices"] = self.ball_vertices.tolist()
            info["facet_normals"] = self.facet_normals.tolist()
        return info
