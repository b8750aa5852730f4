import numpy as np
import pytest
from banach_geom.utils.geom_errors import GeomInvalidParameterError
from banach_geom.utils.rng import SEED_ENV_VAR, derive_rng, resolve_seed


class TestResolveSeed:
    """Seed resolution order: explicit, environment, zero."""

    def test_explicit_seed_wins(self, monkeypatch):
        monkeypatch.setenv(SEED_ENV_VAR, "5")
        assert resolve_seed(42) == 42

    def test_environment_fallback(self, monkeypatch):
        monkeypatch.setenv(SEED_ENV_VAR, "5")
        assert resolve_seed() == 5

    def test_default_zero(self, monkeypatch):
        monkeypatch.delenv(SEED_ENV_VAR, raising=False)
        assert resolve_seed() == 0

    def test_invalid_environment_value(self, monkeypatch):
        monkeypatch.setenv(SEED_ENV_VAR, "not-a-seed")
        with pytest.raises(GeomInvalidParameterError):
            resolve_seed()


class TestDeriveRng:
    """Named sub-streams are reproducible and independent."""

    def test_same_keys_same_draws(self):
        a = derive_rng(42, "face-geometry", "slice_region", 0.5)
        b = derive_rng(42, "face-geometry", "slice_region", 0.5)
        np.testing.assert_array_equal(a.random(5), b.random(5))

    def test_different_keys_differ(self):
        a = derive_rng(42, "face-geometry", "slice_region")
        b = derive_rng(42, "face-geometry", "d_region")
        assert not np.array_equal(a.random(5), b.random(5))

    def test_different_seeds_differ(self):
        a = derive_rng(1, "normed-space")
        b = derive_rng(2, "normed-space")
        assert not np.array_equal(a.random(5), b.random(5))
