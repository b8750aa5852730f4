import pytest
from banach_geom.harness.catalogue import SpaceCatalogue
from banach_geom.harness.repro import GOLDEN_VALUES, repro_example_5_5, repro_linf_counterexample
from banach_geom.utils.geom_errors import GeomAssertionError, GeomUnknownLabelError


class TestLinfCounterexample:
    """Tests for the l_inf HLUR counterexample reproduction."""

    def test_golden_values(self):
        report = repro_linf_counterexample()
        for key, expected in GOLDEN_VALUES.items():
            assert report[key] == pytest.approx(expected, abs=1e-12)
        assert report["checked"] is True

    def test_command_name_matches_default_run(self):
        assert repro_example_5_5() == repro_linf_counterexample()
        assert repro_example_5_5(SpaceCatalogue())["distance"] == 1.0

    def test_inputs_and_face(self):
        report = repro_linf_counterexample()
        assert report["x"] == [1.0, 1.0]
        assert report["x_n"] == [0.0, 1.0]
        assert report["functional"] == [0.5, 0.5]
        assert report["face"] == [[1.0, 1.0]]

    def test_perturbed_sequence(self):
        report = repro_linf_counterexample(epsilon=1e-3)
        assert report["checked"] is False
        assert report["norm_sum"] == pytest.approx(2.0, abs=1e-12)
        assert report["distance"] == pytest.approx(0.999, abs=1e-12)

    def test_forced_check_on_perturbed_sequence(self):
        with pytest.raises(GeomAssertionError) as exc_info:
            repro_linf_counterexample(epsilon=1e-3, check=True)
        assert exc_info.value.error_code == "ASSERT"
        assert exc_info.value.problem_data["key"] == "distance"

    def test_needs_linf_2(self):
        with pytest.raises(GeomUnknownLabelError):
            repro_linf_counterexample(SpaceCatalogue(include_builtins=False))
