import pytest

from lens_topology.core.dset import f_vector, validate_map
from lens_topology.errors import NonPrimeParameterError, PreconditionError
from lens_topology.homology.homology import Z, ZERO, all_homology, all_homology_of_complex, torsion_group
from lens_topology.spaces.lens import LensParams, lens_inclusion, lens_minimal_chain, lens_space


def test_rp3():
    L, projection = lens_space(LensParams(2, (1, 1)))
    assert all_homology(L) == [Z, torsion_group(2), ZERO, Z]
    assert validate_map(projection).ok


def test_lens_five():
    L, _ = lens_space(LensParams(5, (1, 1)))
    assert all_homology(L) == [Z, torsion_group(5), ZERO, Z]


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_lens_f_vector_is_join_over_m(m):
    L, _ = lens_space(LensParams(m, (1, 1)))
    assert f_vector(L) == [2, 2 + m, 2 * m, m]


@pytest.mark.parametrize(
    "ls, index, gcd",
    [((2, 1), 1, 2), ((1, 3), 2, 3), ((0, 1), 1, 6)],
)
def test_non_prime_parameter(ls, index, gcd):
    with pytest.raises(NonPrimeParameterError) as info:
        lens_space(LensParams(6, ls))
    assert info.value.index == index
    assert info.value.gcd == gcd


def test_params_reduced_mod_m():
    p = LensParams(6, (7, -1))
    assert p.ls == (1, 5)
    assert p.n == 2


def test_params_rejected():
    with pytest.raises(PreconditionError):
        LensParams(1, (1,))
    with pytest.raises(PreconditionError):
        LensParams(3, ())


def test_minimal_chain():
    assert all_homology_of_complex(lens_minimal_chain(2, 1)) == [Z, Z]
    assert all_homology_of_complex(lens_minimal_chain(5, 2)) == [Z, torsion_group(5), ZERO, Z]
    assert all_homology_of_complex(lens_minimal_chain(3, 3)) == [
        Z, torsion_group(3), ZERO, torsion_group(3), ZERO, Z,
    ]
    with pytest.raises(PreconditionError):
        lens_minimal_chain(1, 2)


@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize("n", [1, 2])
def test_lens_matches_minimal_chain(m, n):
    L, _ = lens_space(LensParams(m, (1,) * n))
    assert all_homology(L) == all_homology_of_complex(lens_minimal_chain(m, n))


def test_parameter_independence():
    reference = all_homology(lens_space(LensParams(5, (1, 1)))[0])
    for ls in [(1, 2), (2, 3)]:
        assert all_homology(lens_space(LensParams(5, ls))[0]) == reference


def test_inclusion_is_a_map():
    f = lens_inclusion(LensParams(3, (1,)), 2)
    assert f.source.counts == (1, 1)
    assert f.target.dimension == 3
    assert validate_map(f).ok
