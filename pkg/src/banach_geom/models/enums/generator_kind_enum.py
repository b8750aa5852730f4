from enum import unique
from ..bases.base_enum import GeomBaseEnum


@unique
class GeneratorKindEnum(GeomBaseEnum):
    """
    Strategies of sequence_probe for building x_n on the sphere with |x_n + x| -> 2.

    Attributes:
        FACE_WALK: walk inside the exposed faces through x towards their far vertices, then shrink
        RANDOM_TANGENT: radial projections of x + t_n w for seeded tangent directions w
        CAP_SHRINK: points on the rim of shrinking slices around x
        CONSTANT: the constant sequence x_n = anchor (needs an explicit anchor point)
    """
    FACE_WALK = "face-walk"
    RANDOM_TANGENT = "random-tangent"
    CAP_SHRINK = "cap-shrink"
    CONSTANT = "constant"
