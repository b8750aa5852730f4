from enum import unique
from ..bases.base_enum import GeomBaseEnum


@unique
class RepresentationEnum(GeomBaseEnum):
    POLYTOPE = "polytope"
    CLOUD = "cloud"
