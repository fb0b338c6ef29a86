"""Codes over Z_k: the three concrete length-24 codes, duality, weights.

The built-ins are the two Z_4 codes with generator matrices (I | 2I + S) and
(I | S) for the 12x12 skew matrix S, and the Z_11 code with generator
(I | A) for a negacirculant A.  Self-duality, membership and Euclidean
weights are all computed exactly; the only heavy operation is the full
codeword enumeration behind :func:`min_euclidean_weight`, which is guarded.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import log2

import numpy as np

from .linalg import Matrix, Vector, hnf, identity


class OddLengthError(ValueError):
    """Self-duality is impossible for codes of odd length."""


class EnumerationGuardError(ValueError):
    """Raised when the code is too large to enumerate; use the lattice route."""


@dataclass(frozen=True)
class ZkCode:
    """A code over Z_k presented by a generator matrix with reduced entries."""

    modulus: int
    length: int
    generator: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")
        for row in self.generator:
            if len(row) != self.length:
                raise ValueError("generator row length differs from code length")
            if any(not 0 <= x < self.modulus for x in row):
                raise ValueError("generator entries must lie in {0,...,k-1}")

    @property
    def rank(self) -> int:
        return len(self.generator)

    def generator_rows(self) -> Matrix:
        return [list(row) for row in self.generator]

    def to_json_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "length": self.length,
            "generator": self.generator_rows(),
        }


def make_code(modulus: int, rows: Matrix) -> ZkCode:
    reduced = tuple(tuple(x % modulus for x in row) for row in rows)
    length = len(reduced[0]) if reduced else 0
    return ZkCode(modulus=modulus, length=length, generator=reduced)


# 12x12 skew-symmetric matrix with S S^T = 11 I, the seed of both Z_4 codes.
_MCKAY_S = (
    (0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    (-1, 0, 1, -1, 1, 1, 1, -1, -1, -1, 1, -1),
    (-1, -1, 0, 1, -1, 1, 1, 1, -1, -1, -1, 1),
    (-1, 1, -1, 0, 1, -1, 1, 1, 1, -1, -1, -1),
    (-1, -1, 1, -1, 0, 1, -1, 1, 1, 1, -1, -1),
    (-1, -1, -1, 1, -1, 0, 1, -1, 1, 1, 1, -1),
    (-1, -1, -1, -1, 1, -1, 0, 1, -1, 1, 1, 1),
    (-1, 1, -1, -1, -1, 1, -1, 0, 1, -1, 1, 1),
    (-1, 1, 1, -1, -1, -1, 1, -1, 0, 1, -1, 1),
    (-1, 1, 1, 1, -1, -1, -1, 1, -1, 0, 1, -1),
    (-1, -1, 1, 1, 1, -1, -1, -1, 1, -1, 0, 1),
    (-1, 1, -1, 1, 1, 1, -1, -1, -1, 1, -1, 0),
)

_C11_FIRST_ROW = (2, 2, 2, 10, 4, 9, 7, 1, 1, 1, 1, 1)


def mckay_s() -> Matrix:
    """The 12x12 skew matrix S (entries in {-1, 0, 1})."""
    return [list(row) for row in _MCKAY_S]


def negacirculant(first_row: Vector, k: int) -> Matrix:
    """Square matrix whose each row is the previous one shifted right, the
    wrapped entry negated mod k."""
    if any(not 0 <= x < k for x in first_row):
        raise ValueError("first_row entries must lie in {0,...,k-1}")
    n = len(first_row)
    rows = [list(first_row)]
    for _ in range(n - 1):
        prev = rows[-1]
        rows.append([(-prev[-1]) % k] + prev[:-1])
    return rows


def _systematic(modulus: int, right_block: Matrix) -> ZkCode:
    n = len(right_block)
    rows = [identity(n)[i] + right_block[i] for i in range(n)]
    return make_code(modulus, rows)


@lru_cache(maxsize=None)
def code_c4() -> ZkCode:
    """The Z_4 code with generator (I_12 | 2I_12 + S); Construction A gives
    the Leech lattice."""
    s = mckay_s()
    right = [[(2 if i == j else 0) + s[i][j] for j in range(12)] for i in range(12)]
    return _systematic(4, right)


@lru_cache(maxsize=None)
def code_d4() -> ZkCode:
    """The Z_4 code with generator (I_12 | S); Construction A gives the odd
    Leech lattice."""
    return _systematic(4, mckay_s())


@lru_cache(maxsize=None)
def code_c11() -> ZkCode:
    """The self-dual Z_11 code with generator (I_12 | A), A negacirculant."""
    return _systematic(11, negacirculant(list(_C11_FIRST_ROW), 11))


@lru_cache(maxsize=None)
def is_self_dual(code: ZkCode) -> bool:
    """True iff the code equals its dual.

    Checks G * G^T == 0 (mod k) and |C| = k^(n/2), the latter via the HNF
    determinant of the integer row span of (G stacked over k*I_n).
    """
    k, n = code.modulus, code.length
    if n % 2:
        raise OddLengthError(f"length {n} is odd; self-dual codes need even length")
    gen = code.generator_rows()
    for i, u in enumerate(gen):
        for v in gen[: i + 1]:
            if sum(a * b for a, b in zip(u, v)) % k:
                return False
    stacked = gen + [[k if i == j else 0 for j in range(n)] for i in range(n)]
    h, rank = hnf(stacked)
    if rank != n:
        return False
    deth = 1
    for i in range(n):
        deth *= h[i][i]
    order, rem = divmod(k**n, deth)  # |C| = k^n / det(H)
    if rem:
        return False
    return order == k ** (n // 2)


def euclidean_weight(word: Vector, k: int) -> int:
    """Sum of min(x^2, (k-x)^2) over the coordinates of a reduced word."""
    if any(not 0 <= x < k for x in word):
        raise ValueError("codeword entries must lie in {0,...,k-1}")
    return sum(min(x * x, (k - x) * (k - x)) for x in word)


def membership(code: ZkCode, word: Vector) -> bool:
    """Whether ``word`` lies in the (self-dual) code.

    For self-dual C the dual-orthogonality test G * x^T == 0 (mod k) is an
    exact membership test, since C = C^perp.
    """
    if not is_self_dual(code):
        raise ValueError("membership test requires a self-dual code")
    if len(word) != code.length:
        raise ValueError("word length differs from code length")
    k = code.modulus
    return all(sum(a * b for a, b in zip(row, word)) % k == 0 for row in code.generator)


_GUARD_BITS = 26


def min_euclidean_weight(code: ZkCode, cap: int | None = None) -> int | None:
    """Smallest Euclidean weight of a nonzero codeword, by full enumeration.

    Enumerates every codeword exactly once: the integer HNF basis H of
    rho(C) + k Z^n is triangular with diagonal d_i | k, and the codewords
    are the sums of c_i * H_i mod k with 0 <= c_i < k/d_i.  Guarded at
    |C| <= 2^26 (rank * log2(k) <= 26 for the built-ins); above that
    callers must use the lattice route (min norm of A_k(C) times k).

    With ``cap`` set, weights above ``cap`` are cut off: the result is the
    exact minimum when that is <= cap, and None otherwise.
    """
    k, n = code.modulus, code.length
    stacked = code.generator_rows() + [[k if i == j else 0 for j in range(n)] for i in range(n)]
    h, rank = hnf(stacked)
    rows = []
    radices = []
    size_bits = 0.0
    for i in range(rank):
        piv = next(v for v in h[i] if v != 0)
        radix, rem = divmod(k, piv)
        if rem:
            raise ValueError("generator span is not a Z_k module")
        if radix > 1:
            rows.append([x % k for x in h[i]])
            radices.append(radix)
            size_bits += log2(radix)
    if size_bits > _GUARD_BITS:
        raise EnumerationGuardError(
            f"2^{size_bits:.1f} codewords exceed the enumeration guard; "
            "use the lattice route (min norm of A_k(C) times k)"
        )
    weight_of = np.array([min(x * x, (k - x) * (k - x)) for x in range(k)], dtype=np.int64)

    # meet in the middle: split rows so both halves span ~sqrt(|C|) words
    split = 0
    acc = 0.0
    while split < len(rows) and acc < size_bits / 2:
        acc += log2(radices[split])
        split += 1
    lo = _span_mixed(rows[:split], radices[:split], k, n)
    hi = _span_mixed(rows[split:], radices[split:], k, n)

    best: int | None = None
    for i in range(lo.shape[0]):
        words = (lo[i] + hi) % k
        weights = weight_of[words].sum(axis=1)
        if i == 0:
            weights[0] = np.iinfo(np.int64).max  # skip the zero codeword
        m = int(weights.min())
        if best is None or m < best:
            best = m
    if cap is not None and best is not None and best > cap:
        return None
    return best


def _span_words(rows: np.ndarray, k: int) -> np.ndarray:
    """All k^r combinations of the given generator rows, reduced mod k."""
    r = rows.shape[0]
    out = np.zeros((1, rows.shape[1]), dtype=np.int64)
    for i in range(r):
        stack = [(out + c * rows[i]) % k for c in range(k)]
        out = np.concatenate(stack, axis=0)
    return out


def _span_mixed(rows: list[Vector], radices: list[int], k: int, n: int) -> np.ndarray:
    """Combinations sum(c_i * rows[i]) mod k with 0 <= c_i < radices[i]."""
    out = np.zeros((1, n), dtype=np.int64)
    for row, radix in zip(rows, radices):
        arr = np.array(row, dtype=np.int64)
        out = np.concatenate([(out + c * arr) % k for c in range(radix)], axis=0)
    return out
