import pytest
from pydantic import ValidationError
from banach_geom.models.enums.verdict_status_enum import VerdictStatusEnum
from banach_geom.models.reports import ProbeConfig, SuiteReport, Verdict, default_delta_schedule
from banach_geom.utils.rng import SEED_ENV_VAR
from tests.banach_geom.test_inputs import probe_config_input as input_data


class TestVerdict:
    """Tests for the Verdict model."""

    def test_holds(self):
        verdict = Verdict(property="rotund", status="holds-exact")
        assert verdict.holds
        assert verdict.exit_code == 0
        assert verdict.property_name == "rotund"

    def test_failing_needs_certificate(self):
        instance, errors = Verdict.from_dict({"property": "acs", "status": "fails"})
        assert instance is None
        assert "certificate" in str(errors[0])

    def test_failing_with_certificate(self):
        verdict = Verdict(property="acs", status=VerdictStatusEnum.FAILS, certificate={"x": [1.0, 1.0]})
        assert verdict.exit_code == 1
        assert not verdict.holds

    def test_json_uses_property_key(self):
        data = Verdict(property="hlur", status="inconclusive", stats={"samples": 3}).to_json_dict()
        assert data["property"] == "hlur"
        assert data["status"] == "inconclusive"
        assert "property_name" not in data
        assert "note" not in data

    def test_json_keeps_note(self):
        data = Verdict(property="kk", status="holds-exact", note="automatic in finite dimensions").to_json_dict()
        assert data["note"] == "automatic in finite dimensions"


class TestProbeConfig:
    """Tests for the ProbeConfig model."""

    def test_defaults(self, monkeypatch):
        monkeypatch.delenv(SEED_ENV_VAR, raising=False)
        cfg = ProbeConfig()
        assert cfg.samples == 10_000
        assert cfg.effective_seed == 0
        assert cfg.grid_points == 1_000_000
        assert cfg.delta_schedule == default_delta_schedule()
        assert cfg.delta_schedule[0] == 0.5
        assert len(cfg.delta_schedule) == 20

    def test_seed_from_environment(self, monkeypatch):
        monkeypatch.setenv(SEED_ENV_VAR, "42")
        assert ProbeConfig().effective_seed == 42
        assert ProbeConfig(seed=3).effective_seed == 3

    def test_fast_config(self):
        cfg, errors = ProbeConfig.from_dict(input_data.fast_config_input)
        assert cfg is not None and not errors
        assert cfg.seed == 7
        assert cfg.delta_schedule[-1] == 2.0 ** -12

    @pytest.mark.parametrize(
        "data, fragment",
        [
            (input_data.unsorted_schedule_input, "strictly decreasing"),
            (input_data.out_of_range_schedule_input, "[0, 1]"),
        ],
    )
    def test_invalid_schedule(self, data, fragment):
        cfg, errors = ProbeConfig.from_dict(data)
        assert cfg is None
        assert fragment in str(errors[0])

    def test_with_overrides(self):
        cfg = ProbeConfig(seed=1)
        other = cfg.with_overrides(samples=50, seed=None)
        assert other.samples == 50
        assert other.seed == 1
        assert cfg.samples == 10_000
        with pytest.raises(ValidationError):
            cfg.with_overrides(samples=0)


class TestSuiteReport:
    def test_passed_and_json(self):
        verdict = Verdict(property="rotund", status="holds-exact")
        report = SuiteReport(seed=0, table={"l2_2": {"rotund": "holds-exact"}}, verdicts={"l2_2": {"rotund": verdict}})
        assert report.passed
        data = report.to_json_dict()
        assert data["verdicts"]["l2_2"]["rotund"]["property"] == "rotund"
        assert data["cross_check_failures"] == []

        failing = SuiteReport(seed=0, cross_check_failures=["l2_2: rotund does not imply acs"])
        assert not failing.passed
