import time

import pytest

from lens_topology.errors import PreconditionError
from lens_topology.groups.action import is_free
from lens_topology.groups.group import abelianization, cyclic, dihedral
from lens_topology.homology.homology import (
    HomologyGroup,
    Z,
    ZERO,
    all_homology,
    all_homology_of_complex,
    homology,
    torsion_group,
)
from lens_topology.spaces.lens import cyclic_cellular_chain
from lens_topology.spaces.milnor import milnor_base, milnor_total, real_projective, stability_check


def test_rp1_is_a_square():
    B, _ = milnor_base(cyclic(2), 1)
    assert B.counts == (2, 2)
    assert all_homology(B) == [Z, Z]


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_theta_graph(m):
    B, _ = milnor_base(cyclic(m), 1)
    assert B.counts == (2, m)
    assert homology(B, 1) == HomologyGroup(m - 1)


def test_rp0_is_a_point():
    B, _ = real_projective(0)
    assert B.counts == (1,)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_rp_tower(n):
    B, _ = real_projective(n)
    assert all_homology(B) == all_homology_of_complex(cyclic_cellular_chain(2, n))


@pytest.mark.parametrize("m, n", [(2, 1), (2, 3), (3, 1), (3, 2), (4, 1)])
def test_wedge_of_spheres(m, n):
    E = milnor_total(cyclic(m), n).space
    got = all_homology(E, reduced=True)
    assert got == [HomologyGroup((m - 1) ** (n + 1)) if k == n else ZERO for k in range(n + 1)]


def test_milnor_total_is_free():
    assert is_free(milnor_total(dihedral(3), 1))


def test_zm_group_homology_low_degrees():
    B, _ = milnor_base(cyclic(3), 3)
    assert all_homology(B, up_to=2) == [Z, torsion_group(3), ZERO]


@pytest.mark.parametrize("m", [3, 4])
def test_dihedral_h1(m):
    G = dihedral(m)
    B, _ = milnor_base(G, 2)
    assert homology(B, 1) == torsion_group(*abelianization(G))


def test_stability():
    assert stability_check(cyclic(3), 1, 2, 4)
    assert stability_check(cyclic(2), 0, 1, 3)
    assert stability_check(dihedral(3), 1, 2, 3)


def test_stability_outside_range():
    with pytest.raises(PreconditionError):
        stability_check(cyclic(2), 2, 2, 3)


def test_negative_stage_rejected():
    with pytest.raises(PreconditionError):
        milnor_total(cyclic(2), -1)


def test_b5_z5_homology_within_budget():
    start = time.perf_counter()
    B, _ = milnor_base(cyclic(5), 5)
    got = all_homology(B, up_to=4)
    elapsed = time.perf_counter() - start
    assert got == [Z, torsion_group(5), ZERO, torsion_group(5), ZERO]
    assert elapsed < 60, f"B_5(Z_5) homology took {elapsed:.1f}s"
