import pytest
from banach_geom.models.enums import (
    GeneratorKindEnum,
    NormKindEnum,
    PropertyNameEnum,
    RepresentationEnum,
    VerdictStatusEnum,
)


class TestLookup:
    """Case-insensitive lookup with '_' and '-' treated alike."""

    def test_exact_value(self):
        assert NormKindEnum("lp") is NormKindEnum.LP

    def test_case_and_separator_insensitive(self):
        assert NormKindEnum("POLYTOPE-V") is NormKindEnum.POLYTOPE_V
        assert PropertyNameEnum("Anti_Daugavet") is PropertyNameEnum.ANTI_DAUGAVET
        assert GeneratorKindEnum("FACE_WALK") is GeneratorKindEnum.FACE_WALK

    def test_unknown_value(self):
        with pytest.raises(ValueError):
            NormKindEnum("hyperbolic")

    def test_from_name_get_enum(self):
        assert VerdictStatusEnum.from_name_get_enum("holds-exact") is VerdictStatusEnum.HOLDS_EXACT
        assert VerdictStatusEnum.from_name_get_enum("nothing") is None

    def test_from_attribute_get_enum(self):
        assert RepresentationEnum.from_attribute_get_enum("cloud") is RepresentationEnum.CLOUD
        assert RepresentationEnum.from_attribute_get_enum(RepresentationEnum.POLYTOPE) is RepresentationEnum.POLYTOPE
        with pytest.raises(ValueError):
            RepresentationEnum.from_attribute_get_enum("CLOUD")


class TestVerdictStatus:
    @pytest.mark.parametrize(
        "status, holds, code",
        [
            (VerdictStatusEnum.HOLDS_EXACT, True, 0),
            (VerdictStatusEnum.HOLDS_NUMERICAL, True, 0),
            (VerdictStatusEnum.FAILS, False, 1),
            (VerdictStatusEnum.INCONCLUSIVE, False, 2),
        ],
    )
    def test_exit_codes(self, status, holds, code):
        assert status.holds is holds
        assert status.exit_code == code


class TestPropertyNames:
    def test_automatic_in_finite_dimensions(self):
        automatic = {p.value for p in PropertyNameEnum if p.automatic_in_finite_dimensions}
        assert automatic == {"clur", "nsc", "kk", "wnsc", "weakly-clur"}
