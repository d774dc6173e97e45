import numpy as np
import pytest

from lens_topology.core.dset import (
    DeltaMap,
    euler_characteristic,
    identity_map,
    point,
    polygon_circle,
    sphere,
    validate,
)
from lens_topology.errors import NotAutomorphismError
from lens_topology.homology.homology import HomologyGroup, Z, ZERO, all_homology
from lens_topology.spaces.torus import circle_rotation, mapping_torus, two_triangle_torus

TORUS = [Z, HomologyGroup(2), Z]


def test_point_gives_circle():
    T = mapping_torus(point(), identity_map(point()))
    assert T.counts == (1, 1)
    assert all_homology(T) == [Z, Z]


def test_identity_on_triangle_circle():
    C = polygon_circle(3)
    T = mapping_torus(C, identity_map(C))
    assert T.counts == (3, 9, 6)
    assert euler_characteristic(T) == 0
    assert validate(T).ok
    assert all_homology(T) == TORUS


@pytest.mark.parametrize("m", [3, 4, 5, 6, 7])
def test_rotation_gives_torus(m):
    C = polygon_circle(m)
    T = mapping_torus(C, circle_rotation(m, 1))
    assert validate(T).ok
    assert all_homology(T) == TORUS
    assert all_homology(T) == all_homology(two_triangle_torus())


def test_sphere_times_circle():
    S = sphere(2)
    T = mapping_torus(S, identity_map(S))
    assert euler_characteristic(T) == 0
    assert all_homology(T) == [Z, Z, Z, Z]


def test_two_triangle_torus():
    T = two_triangle_torus()
    assert validate(T).ok
    assert euler_characteristic(T) == 0
    assert all_homology(T) == TORUS


def test_rejects_non_bijective_map():
    C = polygon_circle(3)
    collapse = DeltaMap(C, C, (np.zeros(3, dtype=np.int64), np.zeros(3, dtype=np.int64)))
    with pytest.raises(NotAutomorphismError):
        mapping_torus(C, collapse)


def test_rejects_map_to_other_space():
    C3, C4 = polygon_circle(3), polygon_circle(4)
    with pytest.raises(NotAutomorphismError):
        mapping_torus(C3, identity_map(C4))


def test_rejects_bijection_that_breaks_faces():
    C = polygon_circle(3)
    swap = DeltaMap(C, C, (np.array([1, 0, 2]), np.arange(3)))
    with pytest.raises(NotAutomorphismError):
        mapping_torus(C, swap)
