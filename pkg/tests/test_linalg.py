"""Exact linear algebra: HNF, Bareiss determinant, integral LLL, Gram."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddleech import linalg
from oddleech.codes import code_d4, code_c11, mckay_s
from oddleech.qseries import congruence_gram


def stacked_code_rows(code):
    k, n = code.modulus, code.length
    return code.generator_rows() + [[k if i == j else 0 for j in range(n)] for i in range(n)]


def det_oracle(m):
    """Gaussian elimination over Fraction; independent of Bareiss."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    result = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            result = -result
        result *= a[col][col]
        inv = 1 / a[col][col]
        for i in range(col + 1, n):
            factor = a[i][col] * inv
            if factor:
                a[i] = [x - factor * y for x, y in zip(a[i], a[col])]
    assert result.denominator == 1
    return int(result)


# --- hnf ------------------------------------------------------------------

def test_hnf_already_normal():
    h, rank = linalg.hnf([[2, 0], [0, 2]])
    assert h == [[2, 0], [0, 2]]
    assert rank == 2


def test_hnf_z24_over_4z24():
    stacked = linalg.identity(24) + linalg.scalar_mul(4, linalg.identity(24))
    h, rank = linalg.hnf(stacked)
    assert rank == 24
    assert h == linalg.identity(24)


def test_hnf_code_d4_index():
    h, rank = linalg.hnf(stacked_code_rows(code_d4()))
    assert rank == 24
    prod = 1
    for i in range(24):
        prod *= h[i][i]
    assert prod == 4**12  # |D| = 4^12 forces index 4^12


def test_hnf_idempotent_on_code_basis():
    h, _ = linalg.hnf(stacked_code_rows(code_d4()))
    h2, rank2 = linalg.hnf(h)
    assert h2 == h and rank2 == 24


@given(
    st.lists(
        st.lists(st.integers(-9, 9), min_size=3, max_size=3),
        min_size=2,
        max_size=4,
    )
)
@settings(max_examples=150)
def test_hnf_idempotent_and_span_preserving(rows):
    h, rank = linalg.hnf(rows)
    assert len(h) == rank
    h2, rank2 = linalg.hnf(h)
    assert h2 == h and rank2 == rank
    # pivots positive, entries above pivots reduced
    for i, row in enumerate(h):
        j = next(idx for idx, v in enumerate(row) if v != 0)
        assert row[j] > 0
        for above in range(i):
            assert 0 <= h[above][j] < row[j]
    # original rows lie in the span of H (solve by back-substitution)
    for row in rows:
        r = row[:]
        for hrow in h:
            j = next(idx for idx, v in enumerate(hrow) if v != 0)
            q = r[j] // hrow[j]
            r = [a - q * b for a, b in zip(r, hrow)]
        assert all(v == 0 for v in r)


# --- det ------------------------------------------------------------------

def test_det_identity():
    assert linalg.det(linalg.identity(4)) == 1


def test_det_quaternary_gram():
    assert linalg.det(congruence_gram()) == 121


def test_det_mckay():
    s = mckay_s()
    d = linalg.det(s)
    assert d * d == 11**12  # S S^T = 11 I forces det(S)^2 = 11^12
    assert abs(d) == 11**6


def test_det_non_square_rejected():
    with pytest.raises(ValueError):
        linalg.det([[1, 2, 3], [4, 5, 6]])


@given(
    st.lists(
        st.lists(st.integers(-12, 12), min_size=4, max_size=4),
        min_size=4,
        max_size=4,
    )
)
@settings(max_examples=150)
def test_det_matches_fraction_elimination(m):
    assert linalg.det(m) == det_oracle(m)


# --- lll ------------------------------------------------------------------

SCRAMBLE_4 = [
    [1, 2, 3, 5],
    [0, 1, 4, 2],
    [0, 0, 1, 7],
    [0, 0, 0, 1],
]


def test_lll_identity_fixed():
    b, u = linalg.lll_reduce(linalg.identity(4))
    assert b == linalg.identity(4)
    assert u == linalg.identity(4)


def test_lll_scrambled_identity_recovers_orthonormal():
    scrambled = linalg.matmul(SCRAMBLE_4, linalg.identity(4))
    b, u = linalg.lll_reduce(scrambled)
    assert linalg.matmul(u, scrambled) == b
    gram = linalg.gram(b, 1)
    assert gram == linalg.identity(4)  # signed-permutation basis of Z^4


def test_lll_preserves_det_and_span():
    basis, _ = linalg.hnf(stacked_code_rows(code_d4()))
    reduced, u = linalg.lll_reduce(basis)
    assert abs(linalg.det(u)) == 1
    assert abs(linalg.det(reduced)) == abs(linalg.det(basis))
    assert linalg.hnf(reduced) == linalg.hnf(basis)


def test_lll_rank_deficient_rejected():
    with pytest.raises(ValueError):
        linalg.lll_reduce([[1, 2], [2, 4]])


def _assert_lll_reduced(b):
    """Exact rational Gram-Schmidt; checks size reduction and Lovasz (3/4)."""
    n = len(b)
    ortho = [[Fraction(x) for x in row] for row in b]
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i):
            denom = sum(x * x for x in ortho[j])
            mu[i][j] = Fraction(sum(Fraction(bx) * ox for bx, ox in zip(b[i], ortho[j])), denom)
            ortho[i] = [x - mu[i][j] * y for x, y in zip(ortho[i], ortho[j])]
    for i in range(n):
        for j in range(i):
            assert abs(mu[i][j]) <= Fraction(1, 2)
    for i in range(1, n):
        lhs = sum(x * x for x in ortho[i])
        rhs = (Fraction(3, 4) - mu[i][i - 1] ** 2) * sum(x * x for x in ortho[i - 1])
        assert lhs >= rhs


def test_lll_output_is_reduced():
    basis, _ = linalg.hnf(stacked_code_rows(code_c11()))
    reduced, _ = linalg.lll_reduce(basis)
    _assert_lll_reduced(reduced)


# --- gram -----------------------------------------------------------------

def test_gram_scaled_identity():
    assert linalg.gram(linalg.scalar_mul(2, linalg.identity(4)), 4) == linalg.identity(4)


def test_gram_of_code_lattices():
    for code, scale in ((code_d4(), 4), (code_c11(), 11)):
        basis, _ = linalg.hnf(stacked_code_rows(code))
        g = linalg.gram(basis, scale)
        assert linalg.is_symmetric(g)
        assert linalg.det(g) == 1
        # positive definite: leading principal minors positive
        for t in range(1, 7):
            assert linalg.det([row[:t] for row in g[:t]]) > 0


def test_gram_divisibility_failure():
    with pytest.raises(ValueError):
        linalg.gram([[1, 0], [0, 1]], 4)
