import math

import numpy as np
import pytest
from pydantic import ValidationError
from banach_geom.models.enums.norm_kind_enum import NormKindEnum
from banach_geom.models.norm_families import (
    LensFamily,
    LpFamily,
    OneTwoMixFamily,
    PolytopeHFamily,
    PolytopeVFamily,
    StadiumFamily,
    create_norm_family,
)
from banach_geom.models.norm_families.norm_family_factory import (
    NORM_FAMILY_CLASS_MAP,
    family_from_descriptor,
    get_family_class,
)


def _row(values):
    return np.array([values], dtype=float)


class TestLpFamily:
    """Tests for the l_p family."""

    def test_infinite_p_from_string(self):
        family = LpFamily(p="inf")
        assert math.isinf(family.p)
        assert family.conjugate == 1.0
        assert family.model_dump()["p"] == "inf"

    def test_conjugates(self):
        assert LpFamily(p=2).conjugate == 2.0
        assert LpFamily(p=3).conjugate == pytest.approx(1.5)
        assert math.isinf(LpFamily(p=1).conjugate)

    def test_p_below_one_rejected(self):
        with pytest.raises(ValidationError):
            LpFamily(p=0.5)

    def test_gauge_and_support(self):
        assert LpFamily(p=1).gauge(_row([3.0, -4.0]))[0] == 7.0
        assert LpFamily(p=1).support(_row([3.0, -4.0]))[0] == 4.0
        assert LpFamily(p="inf").gauge(_row([3.0, -4.0]))[0] == 4.0

    def test_linf_face_is_an_edge(self):
        face = LpFamily(p="inf").face_vertices(np.array([1.0, 0.0]))
        np.testing.assert_array_equal(face, [[1.0, -1.0], [1.0, 1.0]])

    def test_linf_normal_cone_at_corner(self):
        J = LpFamily(p="inf").normal_cone_vertices(np.array([1.0, 1.0]))
        np.testing.assert_array_equal(J, [[0.0, 1.0], [1.0, 0.0]])

    def test_l3_face_is_norming(self):
        family = LpFamily(p=3)
        f = np.array([0.3, -0.8])
        f = f / family.support(f[None, :])[0]
        x = family.face_vertices(f)[0]
        assert family.gauge(x[None, :])[0] == pytest.approx(1.0)
        assert float(f @ x) == pytest.approx(1.0)

    def test_classification(self):
        assert LpFamily(p=2).is_rotund(2) and LpFamily(p=2).is_smooth(2)
        assert not LpFamily(p=1).is_rotund(2)
        assert LpFamily(p=1).is_rotund(1)
        assert LpFamily(p="inf").is_polyhedral(3)
        assert LpFamily(p=2).ball_vertices(2) is None

    def test_linf_ball_data(self):
        family = LpFamily(p="inf")
        assert family.ball_vertices(3).shape == (8, 3)
        assert family.facet_normals(3).shape == (6, 3)


class TestPolytopeFamilies:
    """Tests for vertex and facet polytopes."""

    def test_redundant_vertices_dropped(self):
        family = PolytopeVFamily(vertices=[[1, 1], [1, -1], [-1, 1], [-1, -1], [0.5, 0], [-0.5, 0]])
        assert family.ball_vertices(2).shape == (4, 2)
        np.testing.assert_allclose(family.facet_normals(2), [[-1, 0], [0, -1], [0, 1], [1, 0]], atol=1e-12)

    def test_gauge_of_square(self):
        family = PolytopeVFamily(vertices=[[1, 1], [1, -1], [-1, 1], [-1, -1]])
        assert family.gauge(_row([0.5, -2.0]))[0] == pytest.approx(2.0)
        assert family.support(_row([1.0, 1.0]))[0] == pytest.approx(2.0)

    def test_asymmetric_rejected(self):
        with pytest.raises(ValidationError):
            PolytopeVFamily(vertices=[[1, 0], [0, 1], [-1, -1]])

    def test_flat_rejected(self):
        with pytest.raises(ValidationError):
            PolytopeVFamily(vertices=[[1, 1], [-1, -1]])

    def test_h_to_v(self):
        diamond = PolytopeHFamily(facets=[[1, 1], [1, -1], [-1, 1], [-1, -1]])
        np.testing.assert_allclose(diamond.ball_vertices(2), [[-1, 0], [0, -1], [0, 1], [1, 0]], atol=1e-12)
        v_family = diamond.to_v()
        assert v_family.gauge(_row([0.5, 0.5]))[0] == pytest.approx(1.0)

    def test_v_to_h_round_trip_gauge(self):
        hexagon = PolytopeVFamily(
            vertices=[[math.cos(k * math.pi / 3), math.sin(k * math.pi / 3)] for k in range(6)]
        )
        X = np.random.default_rng(0).standard_normal((20, 2))
        np.testing.assert_allclose(hexagon.to_h().gauge(X), hexagon.gauge(X), rtol=1e-9)

    def test_h_beyond_dimension_three_rejected(self):
        facets = np.vstack([np.eye(4), -np.eye(4)]).tolist()
        with pytest.raises(ValidationError):
            PolytopeHFamily(facets=facets)

    def test_dimension_check(self):
        family = PolytopeVFamily(vertices=[[1, 1], [1, -1], [-1, 1], [-1, -1]])
        with pytest.raises(ValueError):
            family.validate_dimension(3)


class TestSmoothFamilies:
    """Tests for the non-polyhedral planar families."""

    def test_one_two_mix_dual_and_face(self):
        family = OneTwoMixFamily()
        f = np.array([1.0, 0.0])
        dual = family.support(f[None, :])[0]
        assert dual == pytest.approx(math.sqrt(0.5))
        x = family.face_vertices(f)[0]
        np.testing.assert_allclose(x, [1 / math.sqrt(2), 0.0])
        assert family.gauge(x[None, :])[0] == pytest.approx(1.0)

    def test_one_two_mix_dual_bounds_samples(self):
        family = OneTwoMixFamily()
        rng = np.random.default_rng(1)
        X = rng.standard_normal((2000, 2))
        X = X / family.gauge(X)[:, None]
        F = rng.standard_normal((10, 2))
        duals = family.support(F)
        assert np.all(np.max(F @ X.T, axis=1) <= duals + 1e-12)
        assert np.all(np.max(F @ X.T, axis=1) >= duals - 1e-2)

    def test_one_two_mix_not_smooth_on_axes(self):
        family = OneTwoMixFamily()
        J = family.normal_cone_vertices(family.smoothness_witness(2))
        assert len(J) == 2
        np.testing.assert_allclose(family.support(J), [1.0, 1.0])

    def test_lens_geometry(self):
        lens = LensFamily(d=0.5, R=1.0)
        assert lens.gauge(_row([0.5, 0.0]))[0] == pytest.approx(1.0)
        assert lens.gauge(_row([0.0, lens.corner_height]))[0] == pytest.approx(1.0)
        np.testing.assert_allclose(lens.face_vertices(np.array([2.0, 0.0])), [[0.5, 0.0]])
        J = lens.normal_cone_vertices(np.array([0.0, lens.corner_height]))
        assert len(J) == 2
        np.testing.assert_allclose(lens.support(J), [1.0, 1.0])

    def test_lens_needs_r_above_d(self):
        with pytest.raises(ValidationError):
            LensFamily(d=1.0, R=0.5)

    def test_stadium_geometry(self):
        stadium = StadiumFamily(c=0.5, r=1.0)
        assert stadium.gauge(_row([0.5, 1.0]))[0] == pytest.approx(1.0, rel=1e-12)
        assert stadium.gauge(_row([1.5, 0.0]))[0] == pytest.approx(1.0, rel=1e-12)
        assert stadium.support(_row([0.0, 1.0]))[0] == 1.0
        np.testing.assert_allclose(stadium.face_vertices(np.array([0.0, 1.0])), [[-0.5, 1.0], [0.5, 1.0]])
        assert len(stadium.normal_cone_vertices(np.array([0.0, 1.0]))) == 1

    def test_planar_only(self):
        with pytest.raises(ValueError):
            StadiumFamily(c=0.5, r=1.0).validate_dimension(3)

    @pytest.mark.parametrize("c, r", [(0.5, 1.0), (1.0, 1.0), (2.0, 0.25)])
    def test_stadium_gauge_on_scaled_boundary(self, c, r):
        stadium = StadiumFamily(c=c, r=r)
        theta = np.linspace(-math.pi / 2, math.pi / 2, 41)
        cap = np.column_stack([c + r * np.cos(theta), r * np.sin(theta)])
        flat = np.column_stack([np.linspace(-c, c, 11), np.full(11, r)])
        boundary = np.vstack([cap, -cap, flat, -flat])
        for scale in (0.01, 1.0, 7.5):
            np.testing.assert_allclose(stadium.gauge(scale * boundary), scale, rtol=1e-12)
        assert stadium.gauge(_row([0.0, 0.0]))[0] == 0.0

    @pytest.mark.parametrize("c, r", [(0.5, 1.0), (2.0, 0.25)])
    def test_stadium_support_matches_gauge(self, c, r):
        stadium = StadiumFamily(c=c, r=r)
        angles = np.linspace(0.0, 2 * math.pi, 20001)
        directions = np.column_stack([np.cos(angles), np.sin(angles)])
        sphere = directions / stadium.gauge(directions)[:, None]
        F = np.array([[1.0, 0.0], [0.3, -0.7], [0.0, 2.0], [-1.5, 0.2]])
        np.testing.assert_allclose(np.max(F @ sphere.T, axis=1), stadium.support(F), rtol=1e-4)


class TestNormFamilyFactory:
    """Tests for the kind -> class factory."""

    def test_every_kind_registered(self):
        assert set(NORM_FAMILY_CLASS_MAP) == set(NormKindEnum)
        assert get_family_class(NormKindEnum.LENS) is LensFamily

    def test_create(self):
        family = create_norm_family("STADIUM", {"c": 0.5, "r": 1.0})
        assert isinstance(family, StadiumFamily)
        assert family.kind is NormKindEnum.STADIUM

    def test_unknown_kind(self):
        with pytest.raises(ValueError, match="Unknown norm family kind"):
            create_norm_family("hyperbolic", {})

    def test_invalid_parameters(self):
        with pytest.raises(ValueError, match="Failed to create LpFamily"):
            create_norm_family("lp", {"p": "abc"})

    def test_from_descriptor(self):
        family, errors = family_from_descriptor({"kind": "lp", "p": 2})
        assert family is not None and not errors
        family, errors = family_from_descriptor({"p": 2})
        assert family is None
        assert any("Missing attribute: kind" in str(e) for e in errors)

    def test_descriptor_round_trip(self):
        family = create_norm_family("lens", {"d": 0.5, "R": 1.0})
        assert family.to_descriptor() == {"kind": "lens", "d": 0.5, "R": 1.0}
