import numpy as np
import pytest

from lens_topology.checks import SNF_PATHS as PATHS, minor_gcd_factors
from lens_topology.errors import PreconditionError
from lens_topology.homology.matrix import IntMatrix
from lens_topology.homology.snf import ARRAY_ENTRY_BOUND, smith_normal_form


@pytest.mark.parametrize("path", PATHS)
@pytest.mark.parametrize(
    "values, diagonal",
    [
        ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], (2, 6, 12)),
        ([[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]], (1, 10, 30)),
        ([[2, 0], [0, 3]], (1, 6)),
        ([[4, 0], [0, 6]], (2, 12)),
        ([[0, 0], [0, 0]], ()),
        ([[1, -1, 0], [0, 1, -1], [-1, 0, 1]], (1, 1)),
    ],
)
def test_known_forms(values, diagonal, path):
    form = smith_normal_form(IntMatrix.from_dense(values), **PATHS[path])
    assert form.diagonal == diagonal
    assert form.rank == len(diagonal)


def test_torsion_property():
    form = smith_normal_form(IntMatrix.diagonal([1, 5, 0]))
    assert form.torsion == (5,)
    assert form.rank == 2


def test_agrees_with_minor_gcds():
    rng = np.random.default_rng(seed=7)
    for _ in range(60):
        rows, cols = (int(x) for x in rng.integers(1, 6, size=2))
        values = rng.integers(-4, 5, size=(rows, cols)).tolist()
        M = IntMatrix.from_dense(values, cols=cols)
        want = minor_gcd_factors(values)
        for options in PATHS.values():
            assert list(smith_normal_form(M, **options).diagonal) == want


def test_paths_agree_on_sparse_matrices():
    rng = np.random.default_rng(seed=11)
    for _ in range(5):
        values = rng.integers(-2, 3, size=(70, 90)) * (rng.random((70, 90)) < 0.06)
        M = IntMatrix.from_dense(values.tolist(), cols=90)
        paths = {**PATHS, "lists": {"dense_threshold": 100}}
        diagonals = {smith_normal_form(M, **options).diagonal for options in paths.values()}
        assert len(diagonals) == 1


def test_large_entries_stay_exact():
    big = 2**70
    M = IntMatrix.from_dense([[big, 0], [0, 3 * big]])
    for options in PATHS.values():
        assert smith_normal_form(M, **options).diagonal == (big, 3 * big)


def test_array_path_hands_over_near_the_bound():
    b = ARRAY_ENTRY_BOUND // 2
    # determinant -1, but elimination passes through entries of size b
    M = IntMatrix.from_dense([[b + 1, b], [b, b - 1]])
    assert smith_normal_form(M, dense_threshold=0).diagonal == (1, 1)
    assert smith_normal_form(IntMatrix.diagonal([ARRAY_ENTRY_BOUND, 2]), dense_threshold=0).diagonal == (
        2,
        ARRAY_ENTRY_BOUND,
    )


def test_matrix_drops_zeros_and_checks_range():
    M = IntMatrix(2, 2, {(0, 0): 3, (1, 1): 0})
    assert M.nnz == 1
    with pytest.raises(PreconditionError):
        IntMatrix(2, 2, {(2, 0): 1})


def test_matmul():
    A = IntMatrix.from_dense([[1, 2], [0, 1]])
    B = IntMatrix.from_dense([[1, -2], [0, 1]])
    assert (A @ B) == IntMatrix.diagonal([1, 1])
    with pytest.raises(PreconditionError):
        A @ IntMatrix.zeros(3, 1)


def test_triplet_dump():
    M = IntMatrix.from_dense([[0, -2], [5, 0]])
    text = M.to_triplets()
    assert text == "0 1 -2\n1 0 5\n"
    assert IntMatrix.from_triplets(text, 2, 2) == M
