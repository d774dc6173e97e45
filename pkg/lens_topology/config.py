"""Shared engine settings and environment resolution."""

from contextlib import contextmanager
from dataclasses import dataclass, replace
import multiprocessing
import os
from typing import Iterator

from lens_topology.errors import PreconditionError


@dataclass(frozen=True)
class EngineSettings:
    max_simplices: int
    dense_threshold: int
    array_cells: int
    eager_validation: bool
    lens_grid_m: tuple[int, ...]
    lens_grid_n: tuple[int, ...]


DEFAULT_SETTINGS = EngineSettings(
    max_simplices=10**6,
    dense_threshold=64,
    array_cells=16_000_000,
    eager_validation=False,
    lens_grid_m=(2, 3, 4, 5, 6),
    lens_grid_n=(1, 2, 3),
)


def _int_from_env(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        raise PreconditionError(f"{name} must be an integer, got {raw!r}", variable=name, value=raw) from None


def resolve_max_simplices() -> int:
    """Resolve the simplex cap from environment or the default."""
    return _int_from_env("TOPO_MAX_SIMPLICES", DEFAULT_SETTINGS.max_simplices)


def resolve_eager_validation() -> bool:
    """Resolve whether constructors validate their output."""
    return os.environ.get("TOPO_VALIDATE", "").strip().lower() in {"1", "true", "yes"}


def resolve_n_workers() -> int:
    """Resolve worker count from environment or CPU count."""
    return _int_from_env("N_WORKERS", min(8, multiprocessing.cpu_count()))


def build_settings() -> EngineSettings:
    """Build settings from the defaults with environment overrides applied."""
    return replace(
        DEFAULT_SETTINGS,
        max_simplices=resolve_max_simplices(),
        eager_validation=resolve_eager_validation(),
    )


_current: EngineSettings | None = None


def current_settings() -> EngineSettings:
    global _current
    if _current is None:
        _current = build_settings()
    return _current


@contextmanager
def override_settings(**changes) -> Iterator[EngineSettings]:
    """Temporarily replace fields of the active settings."""
    global _current
    previous = current_settings()
    _current = replace(previous, **changes)
    try:
        yield _current
    finally:
        _current = previous
