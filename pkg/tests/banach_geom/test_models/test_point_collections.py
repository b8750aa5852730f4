import numpy as np
import pytest
from pydantic import ValidationError
from banach_geom.models.enums.representation_enum import RepresentationEnum
from banach_geom.models.sets.point_collections import (
    DensityReport,
    FaceSet,
    FarthestReport,
    FunctionalSet,
    PointSet,
    RegionSample,
)
from banach_geom.models.vectors.vector import Functional, Vector
from tests.banach_geom.test_inputs import point_set_input as input_data


class TestPointSet:
    def test_valid(self):
        K, errors = PointSet.from_dict(input_data.valid_point_set_input)
        assert K is not None and not errors
        assert len(K) == 4
        assert K.dim == 2
        assert K.label == "square"
        assert K.array.shape == (4, 2)

    def test_default_label(self):
        assert PointSet(points=input_data.two_points).label == "K"

    @pytest.mark.parametrize(
        "data",
        [
            input_data.ragged_point_set_input,
            input_data.empty_point_set_input,
            input_data.nonfinite_point_set_input,
        ],
    )
    def test_invalid(self, data):
        K, errors = PointSet.from_dict(data)
        assert K is None
        assert len(errors) == 1

    def test_accepts_vectors(self):
        K = PointSet(points=[Vector.of([1.0, 2.0]), [3.0, 4.0]])
        assert K.points == [[1.0, 2.0], [3.0, 4.0]]


class TestFaceSet:
    def test_polytope_face(self):
        face = FaceSet(points=[[1, -1], [1, 1]], exposing=Functional(coords=[1, 0]))
        assert face.is_polytope
        assert face.representation is RepresentationEnum.POLYTOPE
        assert face.dim == 2
        assert len(face.piece_arrays()) == 1

    def test_cloud_face_needs_mesh(self):
        with pytest.raises(ValidationError):
            FaceSet(points=[[1, 0]], representation="cloud")
        face = FaceSet(points=[[1, 0], [0.9, 0.1]], representation="cloud", mesh=0.01)
        assert not face.is_polytope
        assert len(face.piece_arrays()) == 2

    def test_pieces(self):
        face = FaceSet(points=[[1, 1], [1, -1], [-1, 1]], pieces=[[[1, 1], [1, -1]], [[1, 1], [-1, 1]]])
        pieces = face.piece_arrays()
        assert len(pieces) == 2
        np.testing.assert_array_equal(pieces[1], [[1, 1], [-1, 1]])

    def test_empty(self):
        face = FaceSet(points=[])
        assert face.is_empty
        assert face.dim is None
        assert face.piece_arrays() == []


class TestRegionSample:
    def test_exactness_decides_representation(self):
        exact = RegionSample(points=[[1, 1], [1, 0.8]], defining="slice delta=0.1")
        sampled = RegionSample(points=[[1, 1], [1, 0.8]], defining="slice delta=0.1", exact=False, mesh=0.05)
        assert exact.is_polytope
        assert not sampled.is_polytope
        assert len(sampled.piece_arrays()) == 2

    def test_negative_mesh(self):
        with pytest.raises(ValidationError):
            RegionSample(points=[[1, 1]], defining="d-region", mesh=-1.0)


class TestFunctionalSet:
    def test_non_singleton(self):
        J = FunctionalSet(functionals=[[0, 1], [1, 0]], anchor=Vector(coords=[1, 1]))
        assert not J.is_singleton
        np.testing.assert_array_equal(J.centroid(), [0.5, 0.5])
        assert [f.coords for f in J.as_functionals()] == [[0.0, 1.0], [1.0, 0.0]]

    def test_needs_a_functional(self):
        with pytest.raises(ValidationError):
            FunctionalSet(functionals=[], anchor=Vector(coords=[1, 1]))


class TestReports:
    def test_farthest_report(self):
        report = FarthestReport(
            query=[0.0, 0.0], far_distance=1.0, attaining=[[1.0, 0.0]], attaining_indices=[2], unique=True
        )
        assert report.to_json_dict()["attaining_indices"] == [2]

    def test_density_fraction_bounded(self):
        with pytest.raises(ValidationError):
            DensityReport(fraction=1.5, unique_count=3, samples=2, seed=0, box_side=1.0)
