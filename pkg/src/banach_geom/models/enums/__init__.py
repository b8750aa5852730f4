from .norm_kind_enum import NormKindEnum
from .verdict_status_enum import VerdictStatusEnum
from .representation_enum import RepresentationEnum
from .generator_kind_enum import GeneratorKindEnum
from .property_name_enum import PropertyNameEnum

__all__ = [
    "NormKindEnum",
    "VerdictStatusEnum",
    "RepresentationEnum",
    "GeneratorKindEnum",
    "PropertyNameEnum",
]
