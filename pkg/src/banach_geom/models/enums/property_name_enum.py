from enum import unique
from ..bases.base_enum import GeomBaseEnum


@unique
class PropertyNameEnum(GeomBaseEnum):
    """
    Geometric properties known to the checkers.

    The last five are automatic in finite dimensions and are reported as
    constant holds-exact notes rather than checked.
    """
    ROTUND = "rotund"
    SMOOTH = "smooth"
    ACS = "acs"
    HLUR = "hlur"
    HS = "hs"
    LUR = "lur"
    ANTI_DAUGAVET = "anti-daugavet"
    CLUR = "clur"
    NSC = "nsc"
    KK = "kk"
    WNSC = "wnsc"
    WEAKLY_CLUR = "weakly-clur"

    @property
    def automatic_in_finite_dimensions(self) -> bool:
        return self in (
            PropertyNameEnum.CLUR,
            PropertyNameEnum.NSC,
            PropertyNameEnum.KK,
            PropertyNameEnum.WNSC,
            PropertyNameEnum.WEAKLY_CLUR,
        )
