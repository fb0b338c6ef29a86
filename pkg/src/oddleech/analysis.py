"""Exact lattice verification: short vectors, minimum norm, parity, theta.

Short-vector counts come from a Fincke-Pohst tree search on the LLL-reduced
quadratic form.  Branch bounds use a floating-point Cholesky factorization
with an additive slack of 1/2 on partial sums; every emitted candidate is
then re-verified with exact integer arithmetic, so counts are exact.  At
the dimensions in play (<= 24, small entries) the slack dwarfs any float
error, and the exact accept step is what the counts rest on.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .construction import LatticeRep


@dataclass
class ShortVectorReport:
    """Counts of lattice vectors by norm up to ``norm_bound``.

    ``counts_by_norm`` maps each norm in [1, norm_bound] with at least one
    vector to the number of vectors of that norm (v and -v both counted).
    The zero vector is excluded.  Witnesses, when requested, are coordinate
    vectors with respect to the input basis, both signs, sorted.
    """

    norm_bound: int
    counts_by_norm: dict[int, int]
    witnesses: list[list[int]] | None = None

    def to_json_dict(self) -> dict:
        out: dict = {
            "normBound": self.norm_bound,
            "countsByNorm": {str(k): v for k, v in sorted(self.counts_by_norm.items())},
        }
        if self.witnesses is not None:
            out["witnesses"] = self.witnesses
        return out


def _gram_of(lattice_or_gram) -> linalg.Matrix:
    if isinstance(lattice_or_gram, LatticeRep):
        return lattice_or_gram.gram_rows()
    return linalg.copy_matrix(lattice_or_gram)


def is_unimodular(lattice: LatticeRep) -> bool:
    """Integral Gram with determinant 1."""
    g = lattice.gram_rows()
    return linalg.is_symmetric(g) and linalg.det(g) == 1


def is_even(lattice: LatticeRep) -> bool:
    """Whether all norms are even.

    For an integral Gram G the parity of x G x^T is determined by the
    diagonal: x G x^T = sum x_i^2 G_ii + 2 sum_{i<j} x_i x_j G_ij, so the
    lattice is even iff every diagonal entry is even.
    """
    if not is_unimodular(lattice):
        raise ValueError("parity classification is defined for unimodular input")
    return all(row[i] % 2 == 0 for i, row in enumerate(lattice.gram_scaled))


def _cholesky_mu(g: linalg.Matrix) -> tuple[np.ndarray, np.ndarray]:
    """Unit-lower mu and positive d with Q(x) = sum_i d_i (x_i + sum_{j>i} mu[j,i] x_j)^2."""
    arr = np.array(g, dtype=np.float64)
    chol = np.linalg.cholesky(arr)  # lower triangular, chol @ chol.T = g
    dvec = np.diag(chol) ** 2
    mu = chol / np.diag(chol)[np.newaxis, :]
    return mu, dvec


_STATE_BLOCK_CAP = 1 << 19  # rows per in-flight block; bounds enumeration memory


def _enumerate_candidates(mu: np.ndarray, dvec: np.ndarray, limit: float):
    """Yield blocks of x in Z^n, highest-index nonzero coordinate positive,
    with float-estimated form value <= limit (zero vector included).

    Level-by-level breadth-first expansion: the partial-vector states of one
    tree depth are held in one integer array, so the per-node work is a few
    vectorized operations.  Blocks whose expansion would exceed the state
    cap are split and finished one part at a time, keeping memory bounded
    for large norm bounds.  Block columns are x_0 .. x_{n-1}.
    """
    n = len(dvec)
    stack = [
        (n - 1, np.zeros((1, 0), dtype=np.int64), np.zeros(1), np.ones(1, dtype=bool))
    ]
    while stack:
        k, x_part, rho, zero_suffix = stack.pop()
        dead = False
        while k >= 0:
            if x_part.shape[1]:
                centers = x_part @ mu[k + 1 :, k]
            else:
                centers = np.zeros(len(x_part))
            rem = np.maximum(limit - rho, 0.0)
            radius = np.sqrt(rem / dvec[k])
            lo = np.ceil(-centers - radius).astype(np.int64)
            hi = np.floor(-centers + radius).astype(np.int64)
            lo = np.where(zero_suffix, np.maximum(lo, 0), lo)
            counts = np.maximum(hi - lo + 1, 0)
            total = int(counts.sum())
            if total == 0:
                dead = True
                break
            if total > _STATE_BLOCK_CAP and len(x_part) > 1:
                half = len(x_part) // 2
                stack.append((k, x_part[half:], rho[half:], zero_suffix[half:]))
                x_part = x_part[:half]
                rho = rho[:half]
                zero_suffix = zero_suffix[:half]
                continue
            rep = np.repeat(np.arange(len(x_part)), counts)
            starts = np.cumsum(counts) - counts
            xk = lo[rep] + (np.arange(total) - np.repeat(starts, counts))
            expanded = np.empty((total, x_part.shape[1] + 1), dtype=np.int64)
            expanded[:, 0] = xk
            if x_part.shape[1]:
                expanded[:, 1:] = x_part[rep]
            t = xk + centers[rep]
            rho = rho[rep] + dvec[k] * t * t
            zero_suffix = zero_suffix[rep] & (xk == 0)
            keep = rho <= limit
            x_part = expanded[keep]
            rho = rho[keep]
            zero_suffix = zero_suffix[keep]
            if not len(x_part):
                dead = True
                break
            k -= 1
        if not dead:
            yield x_part


def _exact_norms(rows: np.ndarray, g: linalg.Matrix) -> np.ndarray:
    n = len(g)
    max_x = int(np.abs(rows).max()) if len(rows) else 0
    max_g = max(abs(v) for grow in g for v in grow)
    if n * n * max_x * max_x * max_g < 2**62:
        gnp = np.array(g, dtype=np.int64)
        return np.einsum("ij,jk,ik->i", rows, gnp, rows)
    out = []
    for row in rows.tolist():
        gv = [sum(g[i][j] * row[j] for j in range(n)) for i in range(n)]
        out.append(sum(a * b for a, b in zip(row, gv)))
    return np.array(out, dtype=object)


def short_vectors(lattice_or_gram, bound: int, want_witnesses: bool = False) -> ShortVectorReport:
    """Exact counts of vectors of each norm <= bound of the quadratic form.

    Accepts a LatticeRep (uses its scaled Gram) or a bare positive-definite
    integer Gram matrix.  Runtime grows quickly with the bound; dimension-24
    inputs are only intended for bounds up to about 8.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    g = _gram_of(lattice_or_gram)
    n = len(g)
    gred, u = linalg.lll_gram(g)
    mu, dvec = _cholesky_mu(gred)

    counts: dict[int, int] = {}
    witnesses: list[list[int]] | None = [] if want_witnesses else None
    for candidates in _enumerate_candidates(mu, dvec, bound + 0.5):
        norms = _exact_norms(candidates, gred)
        mask = (norms >= 1) & (norms <= bound)
        for value, cnt in zip(*np.unique(norms[mask], return_counts=True)):
            counts[int(value)] = counts.get(int(value), 0) + 2 * int(cnt)
        if witnesses is not None:
            for row in candidates[mask].tolist():
                orig = [sum(row[i] * u[i][j] for i in range(n)) for j in range(n)]
                witnesses.append(orig)
                witnesses.append([-v for v in orig])
    if witnesses is not None:
        witnesses.sort()
    return ShortVectorReport(norm_bound=bound, counts_by_norm=counts, witnesses=witnesses)


def min_norm(lattice_or_gram) -> int:
    """Smallest positive norm, found by enumeration with increasing bound."""
    bound = 1
    while True:
        counts = short_vectors(lattice_or_gram, bound).counts_by_norm
        if counts:
            return min(counts)
        bound += 1


_THETA_GUARD_DIM = 4
_THETA_GUARD_N = 16


def theta_coeffs(lattice_or_gram, n_max: int) -> list[int]:
    """Theta-series coefficients a(0..n_max): a(n) = #{v : norm(v) = n}."""
    g = _gram_of(lattice_or_gram)
    if len(g) > _THETA_GUARD_DIM and n_max > _THETA_GUARD_N:
        raise ValueError(
            f"theta precision {n_max} exceeds the guard ({_THETA_GUARD_N}) "
            f"for dimension {len(g)}"
        )
    counts = short_vectors(g, n_max).counts_by_norm if n_max >= 1 else {}
    return [1] + [counts.get(i, 0) for i in range(1, n_max + 1)]
