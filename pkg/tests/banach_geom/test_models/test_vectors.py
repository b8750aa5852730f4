import math

import numpy as np
import pytest
from pydantic import ValidationError
from banach_geom.models.vectors.vector import Functional, OperatorMatrix, Vector


class TestVector:
    def test_valid_vector(self):
        v = Vector(coords=[1, 2.5])
        assert v.coords == [1.0, 2.5]
        assert v.dim == 2
        assert v.entity_type == "Vector"

    def test_from_dict_with_alias(self):
        instance, errors = Vector.from_dict({"Coords": [0.0, 1.0]})
        assert instance is not None
        assert len(errors) == 0
        np.testing.assert_array_equal(instance.array, [0.0, 1.0])

    def test_from_dict_invalid_coordinate(self):
        instance, errors = Vector.from_dict({"coords": [1.0, "x"]})
        assert instance is None
        assert any("coordinate must be a number" in str(e) for e in errors)

    def test_non_finite(self):
        with pytest.raises(ValidationError):
            Vector(coords=[1.0, math.inf])

    def test_dimension_mismatch(self):
        with pytest.raises(ValidationError):
            Vector(coords=[1.0, 2.0], dim=3)

    def test_empty(self):
        instance, errors = Vector.from_dict({"coords": []})
        assert instance is None
        assert errors

    def test_equals_within_tolerance(self):
        assert Vector.of([1.0, 1.0]).equals_within_tolerance(Vector.of([1.0, 1.0 + 1e-12]))
        assert not Vector.of([1.0, 1.0]).equals_within_tolerance(Vector.of([1.0, 1.1]))


class TestFunctional:
    def test_evaluate(self):
        f = Functional(coords=[0.5, 0.5])
        assert f.evaluate(Vector(coords=[1, 1])) == 1.0
        assert f.evaluate([0.0, 1.0]) == 0.5

    def test_coeffs_alias(self):
        f, errors = Functional.from_dict({"coeffs": [1, 0]})
        assert len(errors) == 0
        assert f.coords == [1.0, 0.0]
        assert f.coeffs == [1.0, 0.0]
        assert Functional(coeffs=[0.0, 2.0]) == Functional(coords=[0.0, 2.0])
        assert f.to_json_dict()["coords"] == [1.0, 0.0]


class TestOperatorMatrix:
    def test_shear(self):
        T = OperatorMatrix(entries=[[0, 1], [0, 0]])
        assert T.dim == 2
        np.testing.assert_array_equal(T.apply([0.0, 1.0]), [1.0, 0.0])

    def test_identity(self):
        np.testing.assert_array_equal(OperatorMatrix.identity(3).array, np.eye(3))

    def test_not_square(self):
        instance, errors = OperatorMatrix.from_dict({"entries": [[1, 2, 3], [4, 5, 6]]})
        assert instance is None
        assert any("square" in str(e) for e in errors)

    def test_non_finite_entry(self):
        with pytest.raises(ValidationError):
            OperatorMatrix(entries=[[1.0, float("nan")], [0.0, 1.0]])
