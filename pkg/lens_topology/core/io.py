"""JSON file format for Δ-sets."""

import json
from pathlib import Path
from typing import Any

from lens_topology.core.dset import DeltaSet, validate
from lens_topology.errors import InvalidDeltaSetError, SpaceFileError


def read_json(path: str | Path, what: str = "Space") -> Any:
    """Read and decode a JSON file, reporting every failure as SpaceFileError."""
    path = Path(path)
    if not path.exists():
        raise SpaceFileError(f"{what} file not found: {path}", path=str(path))
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise SpaceFileError(f"{path} is not UTF-8 text: {e.reason}", path=str(path)) from e
    except OSError as e:
        raise SpaceFileError(f"Cannot read {path}: {e.strerror or e}", path=str(path)) from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SpaceFileError(f"Invalid JSON in {path}: {e}", path=str(path)) from e


def require_ints(value: Any, where: str) -> None:
    """Raise SpaceFileError unless ``value`` is a (nested) list of JSON integers."""
    if isinstance(value, list):
        for i, item in enumerate(value):
            require_ints(item, f"{where}[{i}]")
    elif isinstance(value, bool) or not isinstance(value, int):
        raise SpaceFileError(f"{where} must be an integer, got {value!r}", where=where)


def delta_set_to_json(D: DeltaSet) -> dict[str, Any]:
    """``{"counts": [...], "faces": [[d0, d1, ...] per dimension >= 1]}``"""
    return {
        "counts": list(D.counts),
        "faces": [[f.tolist() for f in D.faces[k]] for k in range(1, D.dimension + 1)],
    }


def delta_set_from_json(data: Any) -> DeltaSet:
    if not isinstance(data, dict) or "counts" not in data or "faces" not in data:
        raise SpaceFileError("Δ-set JSON needs 'counts' and 'faces'")
    counts = data["counts"]
    faces = data["faces"]
    if not isinstance(counts, list) or not isinstance(faces, list):
        raise SpaceFileError("'counts' and 'faces' must be arrays")
    require_ints(counts, "counts")
    require_ints(faces, "faces")
    if len(faces) != max(len(counts) - 1, 0):
        raise SpaceFileError(
            f"Expected {max(len(counts) - 1, 0)} face tables, got {len(faces)}"
        )
    try:
        D = DeltaSet(counts=tuple(counts), faces=((),) + tuple(tuple(f) for f in faces))
    except (TypeError, ValueError) as e:
        raise SpaceFileError(f"Malformed Δ-set JSON: {e}") from e
    report = validate(D)
    if not report.ok:
        raise InvalidDeltaSetError(report)
    return D


def save_delta_set(D: DeltaSet, path: str | Path) -> None:
    Path(path).write_text(json.dumps(delta_set_to_json(D)) + "\n")


def load_delta_set(path: str | Path) -> DeltaSet:
    """Load a Δ-set file.

    Raises:
        SpaceFileError: If the file cannot be read or is not a well-formed Δ-set
        InvalidDeltaSetError: If the face tables break the simplicial identities
    """
    return delta_set_from_json(read_json(path))
