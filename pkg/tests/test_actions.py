import numpy as np
import pytest

from lens_topology.core.dset import validate, validate_map
from lens_topology.errors import GroupMismatchError, NotFreeError
from lens_topology.groups.action import (
    action_map,
    fixed_point,
    is_free,
    iterated_join_action,
    join_actions,
    quotient,
    rotation_action,
    translation_action,
    validate_action,
)
from lens_topology.groups.group import cyclic, dihedral
from lens_topology.homology.homology import Z, all_homology


def test_rotation_action_is_valid_and_free():
    a = rotation_action(5, 2)
    assert validate_action(a).ok
    assert is_free(a)


def test_rotation_quotient_is_a_circle():
    Q, projection = quotient(rotation_action(5, 2))
    assert Q.counts == (1, 1)
    assert validate_map(projection).ok
    assert all_homology(Q) == [Z, Z]


def test_non_free_rotation():
    a = rotation_action(4, 2)
    assert fixed_point(a) == (2, 0, 0)
    with pytest.raises(NotFreeError) as info:
        quotient(a)
    assert (info.value.element, info.value.dimension, info.value.simplex) == (2, 0, 0)


def test_translation_action():
    a = translation_action(dihedral(3))
    assert validate_action(a).ok
    assert is_free(a)
    Q, _ = quotient(a)
    assert Q.counts == (1,)


def test_join_actions_mismatch():
    with pytest.raises(GroupMismatchError):
        join_actions(rotation_action(3, 1), rotation_action(4, 1))


@pytest.mark.parametrize("m, l1, l2", [(3, 1, 1), (5, 1, 2), (4, 1, 3)])
def test_join_actions_valid(m, l1, l2):
    a = join_actions(rotation_action(m, l1), rotation_action(m, l2))
    assert validate(a.space).ok
    assert validate_action(a).ok
    assert is_free(a)


def test_iterated_join_of_translations():
    a = iterated_join_action(translation_action(cyclic(3)), 3)
    assert a.space.counts == (9, 27, 27)
    assert validate_action(a).ok


def test_action_map_is_automorphism():
    a = join_actions(rotation_action(5, 1), rotation_action(5, 2))
    f = action_map(a, 3)
    assert validate_map(f).ok
    assert f.is_bijective()


def test_quotient_divides_counts():
    a = iterated_join_action(translation_action(dihedral(3)), 2)
    Q, projection = quotient(a)
    assert [6 * c for c in Q.counts] == list(a.space.counts)
    for k, p in enumerate(projection.comp):
        assert np.all(np.bincount(p) == 6)


def test_join_with_free_factor_keeps_stabilizers_of_the_other_factor():
    free, not_free = rotation_action(6, 1), rotation_action(6, 2)
    assert is_free(free) and not is_free(not_free)

    # rotating by 3·2 = 6 steps fixes the second hexagon, so its own vertices stay fixed
    g, k, simplex = fixed_point(join_actions(free, not_free))
    assert (g, k) == (3, 0)
    assert simplex >= 6

    g, k, simplex = fixed_point(join_actions(not_free, free))
    assert (g, k) == (3, 0)
    assert simplex < 6

    with pytest.raises(NotFreeError):
        quotient(join_actions(free, not_free))
