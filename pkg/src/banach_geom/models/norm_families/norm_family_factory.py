"""
Factory for creating norm family instances from JSON descriptors.

Maps each NormKindEnum value to its family class, the way the cross-section
shape parameters are dispatched.
"""

from typing import Any, Dict, List, Optional, Tuple

from ..enums.norm_kind_enum import NormKindEnum
from .base_norm_family import BaseNormFamily
from .norm_families import (
    LensFamily,
    LpFamily,
    OneTwoMixFamily,
    PolytopeHFamily,
    PolytopeVFamily,
    StadiumFamily,
)

NORM_FAMILY_CLASS_MAP = {
    NormKindEnum.LP: LpFamily,
    NormKindEnum.POLYTOPE_V: PolytopeVFamily,
    NormKindEnum.POLYTOPE_H: PolytopeHFamily,
    NormKindEnum.ONE_TWO_MIX: OneTwoMixFamily,
    NormKindEnum.LENS: LensFamily,
    NormKindEnum.STADIUM: StadiumFamily,
}


def create_norm_family(kind: Any, parameters: Dict[str, Any]) -> BaseNormFamily:
    """
    Create a norm family from its kind and parameters.

    Args:
        kind: NormKindEnum member or its string value (case-insensitive)
        parameters: family parameters, e.g. {"p": 2} or {"d": 0.5, "R": 1.0}

    Returns:
        BaseNormFamily: the validated family instance

    Raises:
        ValueError: If the kind is unknown or the parameters are invalid

    Examples:
        >>> create_norm_family("lp", {"p": "inf"}).conjugate
        1.0
    """
    try:
        kind_enum = NormKindEnum(kind)
    except ValueError as e:
        raise ValueError(f"Unknown norm family kind: {kind}") from e
    family_class = NORM_FAMILY_CLASS_MAP[kind_enum]
    try:
        return family_class.model_validate(parameters)
    except Exception as e:
        raise ValueError(f"Failed to create {family_class.__name__} from {parameters}: {str(e)}") from e


def family_from_descriptor(descriptor: Dict[str, Any]) -> Tuple[Optional[BaseNormFamily], List[Exception]]:
    """Tolerant variant used by the JSON loaders: returns (family, errors)."""
    error_logs: List[Exception] = []
    if not isinstance(descriptor, dict):
        return None, [Exception("family descriptor must be a dict")]
    if "kind" not in descriptor:
        return None, [Exception("Missing attribute: kind")]
    params = {k: v for k, v in descriptor.items() if k != "kind"}
    try:
        return create_norm_family(descriptor["kind"], params), error_logs
    except ValueError as e:
        error_logs.append(e)
        return None, error_logs


def get_family_class(kind: NormKindEnum) -> Optional[type]:
    return NORM_FAMILY_CLASS_MAP.get(kind)
