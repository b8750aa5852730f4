import json
import math

import numpy as np
import pytest
from pydantic import ValidationError
from banach_geom.models.enums.norm_kind_enum import NormKindEnum
from banach_geom.models.norm_families import LpFamily
from banach_geom.models.spaces.normed_space import NormedSpace
from tests.banach_geom.test_inputs import space_descriptor_input as input_data


class TestNormedSpace:
    """Tests for parsing and describing normed spaces."""

    @pytest.mark.parametrize(
        "descriptor, kind",
        [
            (input_data.valid_l2_input, NormKindEnum.LP),
            (input_data.valid_l1_input, NormKindEnum.LP),
            (input_data.valid_hexagon_input, NormKindEnum.POLYTOPE_V),
            (input_data.valid_diamond_h_input, NormKindEnum.POLYTOPE_H),
            (input_data.valid_lens_input, NormKindEnum.LENS),
            (input_data.valid_stadium_input, NormKindEnum.STADIUM),
            (input_data.valid_one_two_mix_input, NormKindEnum.ONE_TWO_MIX),
        ],
    )
    def test_valid_descriptors(self, descriptor, kind):
        space, errors = NormedSpace.from_dict(descriptor)
        assert space is not None
        assert len(errors) == 0
        assert space.kind is kind
        assert space.dim == 2
        assert space.entity_type == "NormedSpace"

    def test_label_kept(self):
        space, _ = NormedSpace.from_dict(input_data.valid_l2_input)
        assert space.label == "l2_2"
        assert space.is_euclidean

    @pytest.mark.parametrize(
        "descriptor, fragment",
        [
            (input_data.missing_kind_input, "kind"),
            (input_data.unknown_kind_input, "Unknown norm family kind"),
            (input_data.invalid_p_input, "p must lie in [1, inf]"),
            (input_data.lens_in_3d_input, "planar"),
            (input_data.flat_lens_input, "R > d"),
            (input_data.asymmetric_polytope_input, "symmetric"),
            (input_data.polytope_dim_mismatch_input, "dimension"),
        ],
    )
    def test_invalid_descriptors(self, descriptor, fragment):
        space, errors = NormedSpace.from_dict(descriptor)
        assert space is None
        assert len(errors) == 1
        assert fragment in str(errors[0])

    def test_not_a_dict(self):
        space, errors = NormedSpace.from_dict(["lp", 2])
        assert space is None
        assert "must be a dict" in str(errors[0])

    def test_frozen(self):
        space = NormedSpace.from_descriptor(input_data.valid_linf_input)
        with pytest.raises(ValidationError):
            space.dim = 3

    def test_from_family_instance(self):
        space = NormedSpace(dim=3, family=LpFamily(p=1))
        assert space.is_polyhedral
        assert space.ball_vertices.shape == (6, 3)
        assert space.facet_normals.shape == (8, 3)

    def test_descriptor_round_trip(self):
        space = NormedSpace.from_descriptor(input_data.valid_linf_input, label="box")
        assert space.label == "box"
        assert space.to_descriptor() == {"dim": 2, "family": {"kind": "lp", "p": "inf"}}
        again = NormedSpace.from_descriptor(space.to_descriptor())
        assert again.to_descriptor() == space.to_descriptor()

    def test_descriptor_is_json(self):
        space = NormedSpace.from_descriptor(input_data.valid_lens_input)
        assert json.loads(json.dumps(space.to_descriptor())) == input_data.valid_lens_input

    def test_redundant_vertices_are_dropped(self):
        space = NormedSpace.from_descriptor(input_data.valid_square_v_input)
        np.testing.assert_array_equal(space.ball_vertices, [[-1, -1], [-1, 1], [1, -1], [1, 1]])

    def test_row_norms(self):
        space = NormedSpace.from_descriptor(input_data.valid_hexagon_input)
        np.testing.assert_allclose(space.norms([[1.0, 0.0], [0.5, math.sqrt(3) / 2]]), [1.0, 1.0])
        assert space.dual_norms([1.0, 0.0])[0] == pytest.approx(1.0)

    def test_describe(self):
        info = NormedSpace.from_descriptor(input_data.valid_stadium_input, label="stadium").describe()
        assert info["label"] == "stadium"
        assert info["polyhedral"] is False
        assert info["rotund"] is False
        assert info["smooth"] is True
        assert "ball_vertices" not in info

        info = NormedSpace.from_descriptor(input_data.valid_linf_input).describe()
        assert info["polyhedral"] is True
        assert len(info["ball_vertices"]) == 4
        assert len(info["facet_normals"]) == 4

    def test_from_json(self, tmp_path):
        path = tmp_path / "space.json"
        path.write_text(json.dumps(input_data.valid_one_two_mix_input))
        space, errors = NormedSpace.from_json(path)
        assert space is not None and not errors
        space, errors = NormedSpace.from_json(tmp_path / "missing.json")
        assert space is None
        assert "Error reading" in str(errors[0])
