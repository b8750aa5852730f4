from enum import Enum, unique
from typing import Optional


@unique
class GeomBaseEnum(str, Enum):
    """
    Base class for all enumeration types of the package.

    String-valued enum with case-insensitive lookup, so JSON documents and
    command-line arguments may spell members freely ("HLUR", "hlur").

    Examples:
        >>> @unique
        ... class Colour(GeomBaseEnum):
        ...     RED = "red"
        >>> Colour("RED")
        <Colour.RED: 'red'>
        >>> Colour.from_name_get_enum("red")
        <Colour.RED: 'red'>
    """

    @classmethod
    def _missing_(cls, value):
        if not isinstance(value, str):
            return None
        lowered = value.lower().replace("_", "-")
        for member in cls:
            if member.value.lower().replace("_", "-") == lowered:
                return member
        return None

    @classmethod
    def from_name_get_enum(cls, name_str: str) -> Optional["GeomBaseEnum"]:
        """
        Get enum member by its name (e.g., "HOLDS_EXACT"), case-insensitive.

        Returns:
            Enum member if found, None if not found
        """
        name_str = name_str.upper().replace("-", "_")
        try:
            return cls[name_str]
        except KeyError:
            return None

    @classmethod
    def from_attribute_get_enum(cls, attribute_str: str) -> "GeomBaseEnum":
        """
        Get enum member by its exact value; pass-through for members.

        Raises:
            ValueError: If the value is not found in the enum
        """
        if isinstance(attribute_str, cls):
            return attribute_str

        for member in cls:
            if member.value == attribute_str:
                return member

        raise ValueError(f"Invalid {cls.__name__} value: {attribute_str}")
