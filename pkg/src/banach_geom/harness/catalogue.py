import logging
import math
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from ..models.spaces.normed_space import NormedSpace
from ..utils.geom_errors import GeomInvalidParameterError, GeomUnknownLabelError
from ..utils.json_utils import load_json

logger = logging.getLogger(__name__)


def _hexagon_vertices() -> List[List[float]]:
    return [[math.cos(k * math.pi / 3.0), math.sin(k * math.pi / 3.0)] for k in range(6)]


BUILTIN_DESCRIPTORS: Dict[str, Dict[str, Any]] = {
    "l2_2": {"dim": 2, "family": {"kind": "lp", "p": 2}},
    "l1_2": {"dim": 2, "family": {"kind": "lp", "p": 1}},
    "linf_2": {"dim": 2, "family": {"kind": "lp", "p": "inf"}},
    "hexagon": {"dim": 2, "family": {"kind": "polytope_v", "vertices": _hexagon_vertices()}},
    "lens_default": {"dim": 2, "family": {"kind": "lens", "d": 0.5, "R": 1.0}},
    "stadium_default": {"dim": 2, "family": {"kind": "stadium", "c": 0.5, "r": 1.0}},
    "one_two_mix_2": {"dim": 2, "family": {"kind": "one_two_mix"}},
    "l2_3": {"dim": 3, "family": {"kind": "lp", "p": 2}},
    "linf_3": {"dim": 3, "family": {"kind": "lp", "p": "inf"}},
}


class CatalogueErrorLog(BaseModel):
    label: str = Field(..., alias="Label")
    message: str = Field(..., alias="Message")

    model_config = ConfigDict(populate_by_name=True)


class SpaceCatalogue:
    """
    Named spaces: the built-ins plus any descriptors loaded from JSON.

    Bad descriptors never abort a load; they are collected in ``errors``.

    Examples:
        >>> catalogue = SpaceCatalogue()
        >>> catalogue.get("linf_2").kind.value
        'lp'
        >>> "hexagon" in catalogue.labels
        True
    """

    def __init__(self, include_builtins: bool = True):
        self.spaces: Dict[str, NormedSpace] = {}
        self.errors: List[CatalogueErrorLog] = []
        if include_builtins:
            self.load_dict(BUILTIN_DESCRIPTORS)

    @property
    def labels(self) -> List[str]:
        return list(self.spaces)

    def __contains__(self, label: str) -> bool:
        return label in self.spaces

    def __len__(self) -> int:
        return len(self.spaces)

    def add(self, label: str, space: NormedSpace) -> NormedSpace:
        if label in self.spaces:
            raise GeomInvalidParameterError(f"Duplicate space label: {label}", error_code="PARAM")
        if space.label != label:
            space = space.model_copy(update={"label": label})
        self.spaces[label] = space
        return space

    def get(self, label: str) -> NormedSpace:
        try:
            return self.spaces[label]
        except KeyError:
            raise GeomUnknownLabelError(
                f"Unknown space label: {label}",
                error_code="LABEL",
                problem_data={"known": self.labels},
            ) from None

    def load_dict(self, descriptors: Dict[str, Any]) -> List[CatalogueErrorLog]:
        """Add every {label: descriptor} entry that parses; returns the new error entries."""
        new_errors: List[CatalogueErrorLog] = []
        for label, descriptor in descriptors.items():
            if label in self.spaces:
                new_errors.append(CatalogueErrorLog(label=label, message="duplicate label"))
                continue
            data = {**descriptor, "label": label} if isinstance(descriptor, dict) else descriptor
            space, errors = NormedSpace.from_dict(data)
            if space is None:
                new_errors.extend(CatalogueErrorLog(label=label, message=str(e)) for e in errors)
                continue
            self.spaces[label] = space
        for entry in new_errors:
            logger.warning("catalogue entry %s skipped: %s", entry.label, entry.message)
        self.errors.extend(new_errors)
        return new_errors

    def load_json(self, path: Union[str, Path]) -> List[CatalogueErrorLog]:
        data = load_json(path)
        if not isinstance(data, dict):
            raise GeomInvalidParameterError(f"{path} must hold a {{label: descriptor}} object", error_code="PARAM")
        return self.load_dict(data)


def builtin_catalogue(extra: Optional[Union[str, Path]] = None) -> SpaceCatalogue:
    catalogue = SpaceCatalogue()
    if extra is not None:
        catalogue.load_json(extra)
    return catalogue
