import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from banach_geom.geometry.faces import (
    a0_set,
    c_region,
    containing_faces,
    d_region,
    directed_hausdorff,
    duality_map,
    exposed_face,
    face_coincidence,
    hausdorff,
    hausdorff_with_error,
    slice_region,
)
from banach_geom.geometry.norms import distance_to_set, sphere_sample
from banach_geom.models.enums.verdict_status_enum import VerdictStatusEnum
from banach_geom.models.sets.point_collections import FaceSet
from banach_geom.models.spaces.normed_space import NormedSpace
from banach_geom.utils.geom_errors import GeomInvalidParameterError, GeomNotOnSphereError
from tests.banach_geom.test_inputs import space_descriptor_input as input_data


coordinate = st.floats(min_value=-5, max_value=5, allow_nan=False, allow_infinity=False)
cloud_points = st.lists(st.lists(coordinate, min_size=2, max_size=2), min_size=1, max_size=6)


def _space(descriptor) -> NormedSpace:
    return NormedSpace.from_descriptor(descriptor)


class TestExposedFaces:
    """Tests for exposed faces and the duality map."""

    def test_linf_vertex_face(self):
        face = exposed_face(_space(input_data.valid_linf_input), [0.5, 0.5])
        assert face.points == [[1.0, 1.0]]
        assert face.exposing.coords == [0.5, 0.5]

    def test_linf_edge_face(self):
        face = exposed_face(_space(input_data.valid_linf_input), [0.0, 1.0])
        assert face.points == [[-1.0, 1.0], [1.0, 1.0]]
        assert face.is_polytope

    def test_euclidean_face(self):
        face = exposed_face(_space(input_data.valid_l2_input), [0.6, 0.8])
        np.testing.assert_allclose(face.points, [[0.6, 0.8]])

    def test_stadium_flat_side(self):
        face = exposed_face(_space(input_data.valid_stadium_input), [0.0, 1.0])
        assert face.points == [[-0.5, 1.0], [0.5, 1.0]]

    def test_functional_off_dual_sphere(self):
        with pytest.raises(GeomNotOnSphereError) as exc:
            exposed_face(_space(input_data.valid_linf_input), [1.0, 1.0])
        assert exc.value.error_code == "SPHERE"

    def test_duality_map_at_corner(self):
        J = duality_map(_space(input_data.valid_linf_input), [1.0, 1.0])
        assert J.functionals == [[0.0, 1.0], [1.0, 0.0]]
        assert not J.is_singleton

    def test_duality_map_smooth_point(self):
        J = duality_map(_space(input_data.valid_l2_input), [0.0, 1.0])
        assert J.is_singleton
        np.testing.assert_allclose(J.functionals, [[0.0, 1.0]])

    def test_duality_map_lens_corner(self):
        lens = _space(input_data.valid_lens_input)
        J = duality_map(lens, [0.0, lens.family.corner_height])
        assert len(J.functionals) == 2
        np.testing.assert_allclose(lens.dual_norms(J.array), [1.0, 1.0])

    def test_point_off_sphere(self):
        with pytest.raises(GeomNotOnSphereError):
            duality_map(_space(input_data.valid_l2_input), [0.5, 0.0])

    def test_containing_faces(self):
        linf = _space(input_data.valid_linf_input)
        faces = containing_faces(linf, [1.0, 1.0])
        assert len(faces) == 2
        assert len(containing_faces(linf, [1.0, 0.5])) == 1

    def test_a0_set_at_corner(self):
        A0 = a0_set(_space(input_data.valid_linf_input), [1.0, 1.0])
        assert A0.points == [[-1.0, 1.0], [1.0, -1.0], [1.0, 1.0]]
        assert len(A0.pieces) == 2
        assert A0.exposing is None

    def test_a0_set_rotund(self):
        A0 = a0_set(_space(input_data.valid_l2_input), [0.0, 1.0])
        np.testing.assert_allclose(A0.points, [[0.0, 1.0]])

    @pytest.mark.parametrize(
        "descriptor",
        [
            input_data.valid_linf_input,
            input_data.valid_l1_input,
            input_data.valid_hexagon_input,
            input_data.valid_l2_input,
            input_data.valid_stadium_input,
        ],
    )
    def test_exposed_faces_of_duality_map_lie_in_a0(self, descriptor):
        space = _space(descriptor)
        diagonal = np.array([1.0, 1.0]) / float(space.norms(np.array([1.0, 1.0]))[0])
        for x in [v.coords for v in sphere_sample(space, 12, seed=3)] + [list(diagonal)]:
            A0 = a0_set(space, x)
            for f in duality_map(space, x).functionals:
                assert directed_hausdorff(space, exposed_face(space, f), A0) <= 1e-7


class TestSlices:
    """Tests for slices S(X, f, delta)."""

    def test_linf_corner_slice(self):
        region = slice_region(_space(input_data.valid_linf_input), [0.5, 0.5], 0.1)
        assert region.exact
        np.testing.assert_allclose(sorted(region.points), [[0.8, 1.0], [1.0, 0.8], [1.0, 1.0]])

    @pytest.mark.parametrize("delta", [0.5, 0.25, 0.1, 0.01])
    def test_linf_hausdorff_is_two_delta(self, delta):
        linf = _space(input_data.valid_linf_input)
        f = [0.5, 0.5]
        H = hausdorff(linf, slice_region(linf, f, delta), exposed_face(linf, f))
        assert H == pytest.approx(2 * delta, abs=1e-12)

    def test_zero_delta_is_the_face(self):
        lens = _space(input_data.valid_lens_input)
        region = slice_region(lens, [2.0, 0.0], 0.0)
        np.testing.assert_allclose(region.points, [[0.5, 0.0]])

    def test_sampled_slice_satisfies_inequality(self):
        l2 = _space(input_data.valid_l2_input)
        f = np.array([0.6, 0.8])
        region = slice_region(l2, f, 0.05, count=200, seed=1)
        assert not region.exact
        assert region.mesh > 0
        P = region.array
        assert np.all(P @ f >= 0.95 - 1e-9)
        assert np.all(l2.norms(P) <= 1.0 + 1e-9)

    def test_sampled_slice_is_seeded(self):
        l2 = _space(input_data.valid_l2_input)
        a = slice_region(l2, [0.6, 0.8], 0.05, count=100, seed=3)
        b = slice_region(l2, [0.6, 0.8], 0.05, count=100, seed=3)
        assert a.points == b.points

    def test_delta_out_of_range(self):
        with pytest.raises(GeomInvalidParameterError):
            slice_region(_space(input_data.valid_linf_input), [0.5, 0.5], 1.5)


class TestRegions:
    """Tests for D[x, delta], C[x, delta] and their convergence to A_0(x)."""

    def test_linf_d_region_pieces(self):
        region = d_region(_space(input_data.valid_linf_input), [1.0, 1.0], 0.05)
        assert region.exact
        assert len(region.pieces) == 2

    @pytest.mark.parametrize("delta", [0.25, 0.05, 0.01, 0.001])
    def test_euclidean_d_region_shrinks(self, delta):
        l2 = _space(input_data.valid_l2_input)
        x = [0.0, 1.0]
        region = d_region(l2, x, delta, count=200, seed=2)
        H = hausdorff(l2, region, a0_set(l2, x))
        assert H <= math.sqrt(8 * delta) + 1e-9

    def test_d_region_points_satisfy_inequality(self):
        stadium = _space(input_data.valid_stadium_input)
        x = np.array([1.5, 0.0])
        region = d_region(stadium, x, 0.1, count=200, seed=0)
        assert np.all(stadium.norms(region.array + x) >= 1.8 - 1e-9)
        assert np.all(stadium.norms(region.array) <= 1.0 + 1e-9)

    def test_c_region_on_sphere(self):
        for descriptor in (input_data.valid_linf_input, input_data.valid_one_two_mix_input):
            space = _space(descriptor)
            x = np.array([1.0, 1.0]) / float(space.norms(np.array([1.0, 1.0]))[0])
            region = c_region(space, x, 0.05, count=64, seed=0)
            assert not region.is_empty
            np.testing.assert_allclose(space.norms(region.array), 1.0, atol=1e-8)

    def test_c_region_linf_contains_a0(self):
        linf = _space(input_data.valid_linf_input)
        region = c_region(linf, [1.0, 1.0], 0.0, count=64)
        assert directed_hausdorff(linf, a0_set(linf, [1.0, 1.0]), region) == pytest.approx(0.0, abs=1e-12)


class TestHausdorff:
    def test_segment_and_endpoint(self):
        linf = _space(input_data.valid_linf_input)
        segment = FaceSet(points=[[1, -1], [1, 1]])
        point = FaceSet(points=[[1, 1]])
        assert directed_hausdorff(linf, point, segment) == 0.0
        assert directed_hausdorff(linf, segment, point) == 2.0
        assert hausdorff(linf, segment, point) == 2.0

    def test_with_error(self):
        linf = _space(input_data.valid_linf_input)
        cloud = FaceSet(points=[[1, 1], [1, 0.9]], representation="cloud", mesh=0.1)
        H, err = hausdorff_with_error(linf, cloud, FaceSet(points=[[1, 1]]))
        assert H == pytest.approx(0.1)
        assert err == pytest.approx(0.1)

    @pytest.mark.parametrize(
        "descriptor",
        [input_data.valid_linf_input, input_data.valid_l1_input, input_data.valid_hexagon_input],
    )
    @settings(max_examples=30, deadline=None)
    @given(a=cloud_points, b=cloud_points, c=cloud_points)
    def test_metric_on_clouds(self, descriptor, a, b, c):
        space = _space(descriptor)
        A, B, C = (FaceSet(points=p, representation="cloud", mesh=1e-3) for p in (a, b, c))
        assert hausdorff(space, A, A) == 0.0
        assert hausdorff(space, A, B) == hausdorff(space, B, A)
        assert hausdorff(space, A, C) <= hausdorff(space, A, B) + hausdorff(space, B, C) + 1e-9

    def test_convex_target_is_exact(self):
        linf = _space(input_data.valid_linf_input)
        segment = FaceSet(points=[[1, -1], [1, 1]])
        corner = FaceSet(points=[[1, -1], [1, 1], [0, 1]])
        assert directed_hausdorff(linf, segment, corner) == 0.0
        assert distance_to_set(linf, [1.0, 0.0], corner) == pytest.approx(0.0, abs=1e-12)

    def test_union_target_is_a_lower_bound(self):
        linf = _space(input_data.valid_linf_input)
        segment = FaceSet(points=[[1, -1], [1, 1]])
        ends = FaceSet(points=[[1, -1], [1, 1]], pieces=[[[1, -1]], [[1, 1]]])
        assert directed_hausdorff(linf, segment, ends) == 0.0
        assert distance_to_set(linf, [1.0, 0.0], ends) == pytest.approx(1.0)


class TestFaceCoincidence:
    def test_linf_corner_fails(self):
        verdict = face_coincidence(_space(input_data.valid_linf_input), [1.0, 1.0])
        assert verdict.status is VerdictStatusEnum.FAILS
        assert verdict.certificate["distance"] == pytest.approx(2.0)
        assert verdict.certificate["f"] == [1.0, 0.0]
        assert verdict.certificate["g"] == [0.0, 1.0]

    def test_smooth_point_holds(self):
        verdict = face_coincidence(_space(input_data.valid_l2_input), [0.0, 1.0])
        assert verdict.status is VerdictStatusEnum.HOLDS_EXACT
        assert verdict.note == "J(x) is a singleton"

    def test_lens_corner_holds(self):
        lens = _space(input_data.valid_lens_input)
        verdict = face_coincidence(lens, [0.0, lens.family.corner_height])
        assert verdict.holds
        assert verdict.stats["functionals"] == 2
