from enum import unique
from ..bases.base_enum import GeomBaseEnum


@unique
class VerdictStatusEnum(GeomBaseEnum):
    """
    Outcome of a property check.

    HOLDS_EXACT is reserved for closed-form or combinatorial arguments;
    sampling alone can only give HOLDS_NUMERICAL.
    """
    HOLDS_EXACT = "holds-exact"
    HOLDS_NUMERICAL = "holds-numerical"
    FAILS = "fails"
    INCONCLUSIVE = "inconclusive"

    @property
    def holds(self) -> bool:
        return self in (VerdictStatusEnum.HOLDS_EXACT, VerdictStatusEnum.HOLDS_NUMERICAL)

    @property
    def exit_code(self) -> int:
        if self.holds:
            return 0
        if self is VerdictStatusEnum.FAILS:
            return 1
        return 2
