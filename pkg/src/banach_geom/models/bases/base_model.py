from abc import ABC
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ...utils.json_utils import to_jsonable


class GeomBaseModel(BaseModel, ABC):
    """
    Abstract base for every data type of the package.

    Provides the shared pydantic configuration (field aliases usable by name),
    the auto-filled ``entity_type`` tag, JSON conversion and the tolerant
    ``from_dict`` factory that reports problems instead of raising.

    Examples:
        >>> from banach_geom.models.vectors.vector import Vector
        >>> v = Vector(coords=[1.0, 2.0])
        >>> v.entity_type
        'Vector'
        >>> instance, errors = Vector.from_dict({"coords": [1.0, "x"]})
        >>> instance is None, len(errors)
        (True, 1)
    """
    entity_type: Optional[str] = Field(None, alias="EntityType", exclude=True)

    model_config = ConfigDict(populate_by_name=True, arbitrary_types_allowed=True)

    @model_validator(mode="before")
    @classmethod
    def fill_entity_type(cls, values: Any):
        if isinstance(values, dict) and "EntityType" not in values and "entity_type" not in values:
            values = dict(values)
            values["EntityType"] = cls.__name__
        return values

    @classmethod
    def from_dict(cls, obj: Dict[str, Any]) -> Tuple[Optional["GeomBaseModel"], List[Exception]]:
        error_logs: List[Exception] = []
        if not isinstance(obj, dict):
            return None, [Exception(f"{cls.__name__} data must be a dict, got {type(obj).__name__}")]
        try:
            instance = cls.model_validate(obj)
        except Exception as e:
            error_logs.append(Exception(f"Error instantiating {cls.__name__}: {e}"))
            instance = None
        return instance, error_logs

    def to_json_dict(self) -> Dict[str, Any]:
        return to_jsonable(self.model_dump(mode="python", exclude_none=False))
