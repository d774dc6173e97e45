import json

import pytest

from lens_topology.core.dset import from_simplicial_complex, polygon_circle
from lens_topology.core.io import load_delta_set, save_delta_set
from lens_topology.errors import InvalidDeltaSetError, SpaceFileError
from lens_topology.groups.group import dihedral, load_group, save_group


def test_save_and_load(tmp_path):
    D = from_simplicial_complex([[0, 1, 2], [2, 3]])
    path = tmp_path / "space.json"
    save_delta_set(D, path)
    assert load_delta_set(path) == D


def test_missing_file(tmp_path):
    with pytest.raises(SpaceFileError):
        load_delta_set(tmp_path / "nope.json")


def test_malformed_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(SpaceFileError):
        load_delta_set(path)


def test_missing_keys(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"counts": [1]}))
    with pytest.raises(SpaceFileError):
        load_delta_set(path)


def test_invalid_identities_rejected(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"counts": [2, 1], "faces": [[[0], [5]]]}))
    with pytest.raises(InvalidDeltaSetError):
        load_delta_set(path)


def test_circle_file_format(tmp_path):
    path = tmp_path / "c.json"
    save_delta_set(polygon_circle(3), path)
    data = json.loads(path.read_text())
    assert data == {"counts": [3, 3], "faces": [[[1, 2, 0], [0, 1, 2]]]}


def test_group_file(tmp_path):
    path = tmp_path / "d4.json"
    save_group(dihedral(4), path)
    G = load_group(path)
    assert G.same_as(dihedral(4))


def test_group_file_rejects_non_group(tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"order": 2, "mult": [[0, 1], [1, 1]]}))
    with pytest.raises(SpaceFileError):
        load_group(path)


def test_binary_file_is_a_file_error(tmp_path):
    path = tmp_path / "space.json"
    path.write_bytes(b"\xff\xfe{}")
    with pytest.raises(SpaceFileError):
        load_delta_set(path)
    with pytest.raises(SpaceFileError):
        load_group(path)


def test_directory_is_a_file_error(tmp_path):
    with pytest.raises(SpaceFileError):
        load_delta_set(tmp_path)
    with pytest.raises(SpaceFileError):
        load_group(tmp_path)


@pytest.mark.parametrize(
    "data",
    [
        {"counts": [2, 1], "faces": [[[1.9], [0.2]]]},
        {"counts": [2.0, 1], "faces": [[[1], [0]]]},
        {"counts": [2, 1], "faces": [[[True], [0]]]},
        {"counts": [2, 1], "faces": [[["1"], [0]]]},
    ],
)
def test_non_integer_values_rejected(tmp_path, data):
    path = tmp_path / "space.json"
    path.write_text(json.dumps(data))
    with pytest.raises(SpaceFileError):
        load_delta_set(path)


def test_negative_count_rejected(tmp_path):
    path = tmp_path / "space.json"
    path.write_text(json.dumps({"counts": [-1], "faces": []}))
    with pytest.raises(InvalidDeltaSetError):
        load_delta_set(path)


def test_group_table_must_be_integers(tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"order": 2, "mult": [[0, 1], [1, 0.5]]}))
    with pytest.raises(SpaceFileError):
        load_group(path)
