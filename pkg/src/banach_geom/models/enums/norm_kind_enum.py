from enum import unique
from ..bases.base_enum import GeomBaseEnum


@unique
class NormKindEnum(GeomBaseEnum):
    """
    Norm families of the catalogue, keyed as in the JSON space descriptor.

    Attributes:
        LP: l_p norm, p in [1, inf]
        POLYTOPE_V: gauge of a symmetric polytope given by its vertices
        POLYTOPE_H: gauge of a symmetric polytope given by facet functionals
        ONE_TWO_MIX: (|x|_1^2 + |x|_2^2)^(1/2)
        LENS: intersection of two discs (planar, rotund, not smooth)
        STADIUM: segment plus disc (planar, smooth, not rotund)
    """
    LP = "lp"
    POLYTOPE_V = "polytope_v"
    POLYTOPE_H = "polytope_h"
    ONE_TWO_MIX = "one_two_mix"
    LENS = "lens"
    STADIUM = "stadium"
