"""Truncated integer q-series: eta products, twists, quaternary theta.

Series carry a global exponent offset in units of 1/24 so eta factors
q^(m/24) * prod(1 - q^(mn)) compose exactly; a finalized series must have
offset divisible by 24.  Coefficients are Python integers throughout.

The headline check equates two weight-2 q-expansions coefficientwise up to
a truncation bound (default 1388): the theta series of the quaternary form
with Gram M below, against the eta-quotient combination built from
sigma_1 and the coefficients b(n) of eta(z)^2 eta(11z)^2.  Both sides are
twisted by the principal characters mod 2 and mod 11; see
:func:`identity_check`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from . import linalg


@dataclass(frozen=True)
class QSeries:
    """Integer coefficients of q^(offset24/24 + i) for i = 0..len(coeffs)-1,
    exact up to exponent ``precision``."""

    precision: int
    offset24: int
    coeffs: tuple[int, ...]

    @property
    def base_exponent(self) -> int:
        if self.offset24 % 24:
            raise ValueError("series has a fractional exponent offset")
        return self.offset24 // 24

    def coefficient(self, n: int) -> int:
        """Coefficient of q^n (integer-exponent series only)."""
        if n > self.precision:
            raise ValueError(f"coefficient {n} beyond precision {self.precision}")
        i = n - self.base_exponent
        if i < 0 or i >= len(self.coeffs):
            return 0
        return self.coeffs[i]

    def coefficients(self, n_max: int | None = None) -> list[int]:
        """Dense coefficient list for q^0 .. q^n_max."""
        if n_max is None:
            n_max = self.precision
        return [self.coefficient(n) for n in range(n_max + 1)]

    def sparse_str(self) -> str:
        """Space-separated "n:coeff" terms, nonzero coefficients only."""
        base = self.base_exponent
        terms = [f"{base + i}:{c}" for i, c in enumerate(self.coeffs) if c]
        return " ".join(terms) if terms else "0"


#: an eta factor eta(m z)^e, given as (arg_multiple, exponent)
EtaFactor = tuple[int, int]


def _mul_trunc(a: list[int], b: list[int], n: int) -> list[int]:
    out = [0] * (n + 1)
    for i, ai in enumerate(a[: n + 1]):
        if ai:
            top = n - i
            for j, bj in enumerate(b[: top + 1]):
                if bj:
                    out[i + j] += ai * bj
    return out


def _inv_trunc(a: list[int], n: int) -> list[int]:
    """Inverse of an integer series with constant term +-1, truncated at n."""
    if not a or a[0] not in (1, -1):
        raise ValueError("series inversion requires constant term +-1")
    c0 = a[0]
    out = [0] * (n + 1)
    out[0] = c0
    for i in range(1, n + 1):
        s = 0
        for j in range(1, min(i, len(a) - 1) + 1):
            s += a[j] * out[i - j]
        out[i] = -c0 * s
    return out


def _euler_power(m: int, e: int, n: int) -> list[int]:
    """prod_{j>=1} (1 - q^(m j))^e truncated at degree n, for e >= 1."""
    out = [0] * (n + 1)
    out[0] = 1
    for _ in range(e):
        for j in range(m, n + 1, m):
            # multiply by the sparse binomial (1 - q^j), in place
            for idx in range(n, j - 1, -1):
                out[idx] -= out[idx - j]
    return out


def eta_product(factors: list[EtaFactor], n_max: int) -> QSeries:
    """Truncated expansion of prod eta(m z)^e.

    The total exponent offset sum(m*e) must be divisible by 24 so the
    result lives on integer exponents.  Negative exponents go through exact
    power-series inversion (denominator constant term is 1).
    """
    offset24 = sum(m * e for m, e in factors)
    if offset24 % 24:
        raise ValueError(
            f"eta product has fractional exponent offset {offset24}/24; "
            "not an integer-exponent series"
        )
    shift = offset24 // 24
    depth = n_max - shift
    if depth < 0:
        return QSeries(precision=n_max, offset24=offset24, coeffs=())
    num = [0] * (depth + 1)
    num[0] = 1
    den = [0] * (depth + 1)
    den[0] = 1
    for m, e in factors:
        if m < 1:
            raise ValueError("eta argument multiple must be positive")
        if e > 0:
            num = _mul_trunc(num, _euler_power(m, e, depth), depth)
        elif e < 0:
            den = _mul_trunc(den, _euler_power(m, -e, depth), depth)
    coeffs = _mul_trunc(num, _inv_trunc(den, depth), depth)
    return QSeries(precision=n_max, offset24=offset24, coeffs=tuple(coeffs))


def sigma1(n: int) -> int:
    """Sum of the positive divisors of n."""
    if n < 1:
        raise ValueError("sigma_1 is defined for positive integers")
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            total += d
            if d != n // d:
                total += n // d
    return total


def _sigma1_table(n: int) -> list[int]:
    table = [0] * (n + 1)
    for d in range(1, n + 1):
        for mult in range(d, n + 1, d):
            table[mult] += d
    return table


def sigma1_series(n_max: int) -> QSeries:
    """sum over odd exponents of sigma_1(2n-1) q^(2n-1), truncated at n_max."""
    table = _sigma1_table(n_max)
    coeffs = [0] * n_max
    for n in range(1, n_max + 1, 2):
        coeffs[n - 1] = table[n]
    return QSeries(precision=n_max, offset24=24, coeffs=tuple(coeffs))


def twist(series: QSeries, p: int) -> QSeries:
    """Multiply the coefficient of q^n by chi_p(n) = 0 if p | n else 1."""
    base = series.base_exponent
    coeffs = tuple(
        0 if (base + i) % p == 0 else c for i, c in enumerate(series.coeffs)
    )
    return QSeries(precision=series.precision, offset24=series.offset24, coeffs=coeffs)


def congruence_gram() -> linalg.Matrix:
    """Gram matrix of the rank-4 congruence lattice behind the frame search.

    The lattice is {(a,b,c,d) : a = d and b = c (mod 4)} with the form
    (a^2 + 11 b^2 + c^2 + 11 d^2)/4; it is spanned by (4,0,0,0), (0,4,0,0),
    (1,0,0,1), (0,1,1,0).  The Gram matrix is computed from those spanning
    vectors, exactly.
    """
    span = [[4, 0, 0, 0], [0, 4, 0, 0], [1, 0, 0, 1], [0, 1, 1, 0]]
    w = [1, 11, 1, 11]
    g = []
    for u in span:
        row = []
        for v in span:
            num = sum(wi * ui * vi for wi, ui, vi in zip(w, u, v))
            q, r = divmod(num, 4)
            if r:
                raise ArithmeticError("congruence Gram entry not integral")
            row.append(q)
        g.append(row)
    return g


def quaternary_theta(g: linalg.Matrix, n_max: int) -> QSeries:
    """Representation numbers a(n) = #{x in Z^4 : x G x^T = n} for n <= n_max.

    Direct box enumeration: |x_i| <= sqrt(n_max * (G^-1)_ii), with the
    inverse diagonal taken exactly as adjugate/determinant.  Values are
    accumulated in int64 (the box keeps them far below 2^63).
    """
    n = len(g)
    if n != 4 or not linalg.is_symmetric(g):
        raise ValueError("expected a symmetric 4x4 Gram matrix")
    for i in range(1, 5):
        if linalg.det([row[:i] for row in g[:i]]) <= 0:
            raise ValueError("Gram matrix is not positive definite")
    detg = linalg.det(g)
    bounds = []
    for i in range(4):
        minor = [
            [g[r][c] for c in range(4) if c != i] for r in range(4) if r != i
        ]
        mi = linalg.det(minor)
        bounds.append(isqrt(n_max * mi * detg) // detg)

    r0 = np.arange(-bounds[0], bounds[0] + 1, dtype=np.int64)
    r1 = np.arange(-bounds[1], bounds[1] + 1, dtype=np.int64)
    r2 = np.arange(-bounds[2], bounds[2] + 1, dtype=np.int64)
    r3 = np.arange(-bounds[3], bounds[3] + 1, dtype=np.int64)
    gnp = np.array(g, dtype=np.int64)

    counts = np.zeros(n_max + 1, dtype=np.int64)
    x0 = r0[:, None, None, None]
    x1 = r1[None, :, None, None]
    x2 = r2[None, None, :, None]
    # partial form value over (x0, x1, x2), broadcast once
    q012 = (
        gnp[0, 0] * x0 * x0
        + gnp[1, 1] * x1 * x1
        + gnp[2, 2] * x2 * x2
        + 2 * gnp[0, 1] * x0 * x1
        + 2 * gnp[0, 2] * x0 * x2
        + 2 * gnp[1, 2] * x1 * x2
    )
    lin = 2 * (gnp[0, 3] * x0 + gnp[1, 3] * x1 + gnp[2, 3] * x2)
    chunk = 8
    for start in range(0, len(r3), chunk):
        x3 = r3[start : start + chunk][None, None, None, :]
        vals = q012 + lin * x3 + gnp[3, 3] * x3 * x3
        flat = vals.ravel()
        flat = flat[(flat >= 0) & (flat <= n_max)]
        counts += np.bincount(flat, minlength=n_max + 1)
    return QSeries(precision=n_max, offset24=0, coeffs=tuple(int(v) for v in counts))


def _primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, flag in enumerate(sieve) if flag]


def b_series(n_max: int) -> QSeries:
    """Coefficients b(n) of eta(z)^2 eta(11z)^2 = sum b(n) q^n."""
    return eta_product([(1, 2), (11, 2)], n_max)


DEFAULT_IDENTITY_BOUND = 1388  # twice the genus of the relevant congruence group


def _identity_check_arrays(
    a: list[int], sig: list[int], b: list[int], n_max: int
) -> tuple[bool, int | None]:
    for n in range(1, n_max + 1):
        if n % 2 == 0 or n % 11 == 0:
            continue  # both sides twisted to zero by chi_2 * chi_11
        if 5 * a[n] != 4 * (sig[n] - b[n]):
            return False, n
    return True, None


def identity_check(n_max: int = DEFAULT_IDENTITY_BOUND) -> tuple[bool, int | None]:
    """Coefficientwise check 5 a(n) = 4 (sigma_1(n) - b(n)) for n coprime to 22.

    a(n) counts representations by the quaternary congruence form; b(n) are
    the eta(z)^2 eta(11z)^2 coefficients.  Both q-expansions are twisted by
    the principal characters mod 2 *and* mod 11 before comparison: the
    mod-2 twist alone does not kill the eta side at even n (b(2) = -2), so
    the comparison is made on the common support gcd(n, 22) = 1.  On odd
    prime indices p != 11 this is exactly a(p) = (4/5)(p + 1 - b(p)).

    Returns (holds, first mismatching index or None).
    """
    theta = quaternary_theta(congruence_gram(), n_max)
    sig = sigma1_series(n_max)
    b = b_series(n_max)
    lhs = twist(twist(theta, 2), 11)
    rhs_sig = twist(twist(sig, 2), 11)
    rhs_b = twist(twist(b, 2), 11)
    return _identity_check_arrays(
        lhs.coefficients(n_max),
        rhs_sig.coefficients(n_max),
        rhs_b.coefficients(n_max),
        n_max,
    )


def a_p_formula(p: int, b_coeffs: QSeries | None = None) -> int:
    """(4/5)(p + 1 - b(p)) as an exact integer, for an odd prime p != 11."""
    if p < 3 or p == 11:
        raise ValueError("formula applies to odd primes p != 11")
    if p not in _primes_upto(p):
        raise ValueError(f"{p} is not prime")
    series = b_coeffs if b_coeffs is not None else b_series(p)
    bp = series.coefficient(p)
    num = 4 * (p + 1 - bp)
    q, r = divmod(num, 5)
    if r:
        raise ArithmeticError(f"4(p+1-b(p)) = {num} is not divisible by 5 at p={p}")
    return q


def ramanujan_check(p_max: int) -> bool:
    """b(p)^2 < 4p for all primes p <= p_max (exact integer comparison)."""
    series = b_series(p_max)
    return all(series.coefficient(p) ** 2 < 4 * p for p in _primes_upto(p_max))
