import random

import pytest

from normtower import fp_linalg
from normtower.errors import NotInvertible
from normtower.fp_linalg import FpMatrix


def test_matrix_construction_validates():
    with pytest.raises(ValueError):
        FpMatrix(4, 1, 1, [0])  # modulus must be prime
    with pytest.raises(ValueError):
        FpMatrix(3, 2, 2, [0, 1, 2])  # wrong entry count
    m = FpMatrix.from_rows(3, [[4, -1], [0, 2]])
    assert m.to_rows() == [[1, 2], [0, 2]]


def test_identity_multiplication():
    rng = random.Random(0)
    m = FpMatrix(5, 3, 3, [rng.randrange(5) for _ in range(9)])
    assert fp_linalg.mat_mul(FpMatrix.identity(5, 3), m) == m
    assert fp_linalg.mat_mul(m, FpMatrix.identity(5, 3)) == m


def test_unipotent_orders():
    u2 = FpMatrix.from_rows(2, [[1, 1], [0, 1]])
    assert fp_linalg.mat_mul(u2, u2) == FpMatrix.identity(2, 2)
    u3 = FpMatrix.from_rows(3, [[1, 1], [0, 1]])
    assert fp_linalg.mat_pow(u3, 3) == FpMatrix.identity(3, 2)
    assert fp_linalg.mat_pow(u3, 2) != FpMatrix.identity(3, 2)


def test_mat_pow_edges():
    m = FpMatrix.from_rows(7, [[2, 1], [1, 3]])
    assert fp_linalg.mat_pow(m, 0) == FpMatrix.identity(7, 2)
    assert fp_linalg.mat_pow(m, 1) == m
    with pytest.raises(ValueError):
        fp_linalg.mat_pow(FpMatrix(7, 1, 2, [1, 2]), 2)


def test_rank_examples():
    assert fp_linalg.rank(FpMatrix.zeros(3, 4, 4)) == 0
    assert fp_linalg.rank(FpMatrix.identity(2, 5)) == 5
    assert fp_linalg.rank(FpMatrix.from_rows(2, [[1, 1], [1, 1]])) == 1


def test_kernel_basis_examples():
    assert fp_linalg.kernel_basis(FpMatrix.identity(3, 4)) == []
    basis = fp_linalg.kernel_basis(FpMatrix.zeros(3, 2, 2))
    assert sorted(basis) == [(0, 1), (1, 0)]
    basis = fp_linalg.kernel_basis(FpMatrix.from_rows(3, [[1, 2]]))
    assert basis == [(1, 1)]  # x + 2y = 0 over F_3


def test_rank_nullity_and_product_bound():
    rng = random.Random(7)
    for _ in range(50):
        p = rng.choice((2, 3, 5, 11))
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        a = FpMatrix(p, rows, cols, [rng.randrange(p) for _ in range(rows * cols)])
        r = fp_linalg.rank(a)
        kernel = fp_linalg.kernel_basis(a)
        assert r + len(kernel) == cols
        for v in kernel:
            image = [sum(a[i, j] * v[j] for j in range(cols)) % p for i in range(rows)]
            assert not any(image)
        inner = rng.randint(1, 6)
        b = FpMatrix(p, cols, inner, [rng.randrange(p) for _ in range(cols * inner)])
        assert fp_linalg.rank(fp_linalg.mat_mul(a, b)) <= min(r, fp_linalg.rank(b))


def test_inverse_roundtrip():
    rng = random.Random(9)
    for p in (2, 3, 13):
        for n in (1, 2, 5):
            m = fp_linalg.random_invertible(p, n, rng)
            assert fp_linalg.mat_mul(m, fp_linalg.inverse(m)) == FpMatrix.identity(p, n)
    with pytest.raises(NotInvertible):
        fp_linalg.inverse(FpMatrix.zeros(3, 2, 2))


def test_rref_is_deterministic_and_idempotent():
    rng = random.Random(4)
    for _ in range(20):
        a = FpMatrix(3, 4, 5, [rng.randrange(3) for _ in range(20)])
        reduced, r, pivots = fp_linalg.rref(a)
        assert fp_linalg.rref(a) == (reduced, r, pivots)
        assert fp_linalg.rref(reduced) == (reduced, r, pivots)
        assert len(pivots) == r == fp_linalg.rank(a)


def test_nilpotent_rank_sequence_blocks():
    # J_3 + J_2: ranks 5, 3, 1, 0
    sigma = FpMatrix.from_rows(
        3,
        [
            [0, 1, 0, 0, 0],
            [0, 0, 1, 0, 0],
            [0, 0, 0, 0, 0],
            [0, 0, 0, 0, 1],
            [0, 0, 0, 0, 0],
        ],
    )
    assert fp_linalg.nilpotent_rank_sequence(sigma) == [5, 3, 1, 0]
    with pytest.raises(ValueError):
        fp_linalg.nilpotent_rank_sequence(FpMatrix.identity(3, 2))
