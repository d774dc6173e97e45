import pytest

from lens_topology.config import (
    DEFAULT_SETTINGS,
    build_settings,
    current_settings,
    override_settings,
    resolve_n_workers,
)
from lens_topology.errors import PreconditionError


def test_defaults():
    assert DEFAULT_SETTINGS.max_simplices == 10**6
    assert DEFAULT_SETTINGS.lens_grid_m == (2, 3, 4, 5, 6)
    assert DEFAULT_SETTINGS.lens_grid_n == (1, 2, 3)
    assert DEFAULT_SETTINGS.eager_validation is False


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("TOPO_MAX_SIMPLICES", "500")
    monkeypatch.setenv("TOPO_VALIDATE", "true")
    settings = build_settings()
    assert settings.max_simplices == 500
    assert settings.eager_validation is True


def test_n_workers_from_environment(monkeypatch):
    monkeypatch.setenv("N_WORKERS", "3")
    assert resolve_n_workers() == 3


def test_override_settings_restores():
    before = current_settings()
    with override_settings(max_simplices=7) as inner:
        assert inner.max_simplices == 7
        assert current_settings().max_simplices == 7
    assert current_settings() == before


@pytest.mark.parametrize("name", ["TOPO_MAX_SIMPLICES", "N_WORKERS"])
def test_non_integer_variable_names_itself(monkeypatch, name):
    monkeypatch.setenv(name, "1e6")
    with pytest.raises(PreconditionError, match=name) as info:
        build_settings() if name == "TOPO_MAX_SIMPLICES" else resolve_n_workers()
    assert info.value.details["variable"] == name


def test_array_cells_default():
    assert DEFAULT_SETTINGS.array_cells == 16_000_000
