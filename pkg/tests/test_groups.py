import numpy as np
import pytest

from lens_topology.core.abelian import canonical_invariant_factors, elementary_divisors
from lens_topology.errors import PreconditionError
from lens_topology.groups.group import (
    FiniteGroup,
    abelianization,
    commutator_subgroup,
    cyclic,
    dihedral,
    direct_product,
    parse_group,
    validate_group,
)


@pytest.mark.parametrize("G", [cyclic(1), cyclic(4), dihedral(3), dihedral(4), direct_product(cyclic(2), dihedral(3))])
def test_tables_are_groups(G):
    assert validate_group(G).ok


def test_validate_group_flags_non_associative_table():
    # a Latin square with identity 0 that is not associative
    table = np.array([
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ])
    report = validate_group(FiniteGroup(table))
    assert not report.ok
    assert any(v[2] == "associativity" for v in report.violations)


def test_cyclic_group():
    G = cyclic(6)
    assert G.order == 6
    assert G.is_abelian()
    assert G.element_order(1) == 6
    assert G.element_order(2) == 3
    assert G.inverse(1) == 5


def test_dihedral_group():
    G = dihedral(3)
    assert G.order == 6
    assert not G.is_abelian()
    # reflections are involutions
    for s in range(3, 6):
        assert G.element_order(s) == 2
        assert G.inverse(s) == s
    assert G.element_order(1) == 3


@pytest.mark.parametrize(
    "G, expected",
    [
        (cyclic(1), []),
        (cyclic(6), [6]),
        (dihedral(3), [2]),
        (dihedral(4), [2, 2]),
        (dihedral(5), [2]),
        (dihedral(6), [2, 2]),
        (direct_product(cyclic(2), cyclic(3)), [6]),
        (direct_product(cyclic(2), cyclic(4)), [2, 4]),
    ],
)
def test_abelianization(G, expected):
    assert abelianization(G) == expected


def test_commutator_subgroup_of_d4():
    # [D_4, D_4] = {1, r^2}
    assert commutator_subgroup(dihedral(4)) == {0, 2}


def test_parse_group():
    G = parse_group("Z:2 x Z:2")
    assert G.order == 4
    assert abelianization(G) == [2, 2]
    assert parse_group("D:5").same_as(dihedral(5))
    with pytest.raises(PreconditionError):
        parse_group("Q:8")


def test_invariant_factors():
    assert canonical_invariant_factors([2, 3]) == [6]
    assert canonical_invariant_factors([4, 2, 1, 6]) == [2, 2, 12]
    assert canonical_invariant_factors([0, 1]) == []
    assert elementary_divisors([12]) == {2: [2], 3: [1]}


FACTORS = [cyclic(1), cyclic(2), cyclic(3), cyclic(4), cyclic(6), dihedral(3), dihedral(4), dihedral(5)]


@pytest.mark.parametrize("G", FACTORS)
@pytest.mark.parametrize("H", FACTORS)
def test_abelianization_of_products_merges_factors(G, H):
    want = canonical_invariant_factors(abelianization(G) + abelianization(H))
    assert abelianization(direct_product(G, H)) == want
