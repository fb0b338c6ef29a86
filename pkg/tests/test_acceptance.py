"""Acceptance suite: one test per criterion, printing one pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as they
complete.  Everything here is exact integer arithmetic; no tolerances.
"""

import time

import numpy as np
import pytest

from oddleech import linalg
from oddleech.analysis import is_even, is_unimodular, min_norm, short_vectors
from oddleech.codes import code_c11, is_self_dual
from oddleech.construction import construction_a
from oddleech.frames import (
    QuaternaryRep,
    build_frame,
    extract_code,
    multiply_frame,
    p_matrix,
    standard_frame_11,
    verify_frame,
)
from oddleech.qseries import (
    _primes_upto,
    b_series,
    congruence_gram,
    eta_product,
    identity_check,
    quaternary_theta,
    sigma1_series,
)

_AMBIENT_SCALE = {"D4": 4, "C11": 11}


def report(number: int, text: str) -> None:
    print(f"PASS criterion {number}: {text}", flush=True)


def test_criterion_1_odd_leech_identification(lattice_d4):
    start = time.time()
    assert is_unimodular(lattice_d4)
    assert linalg.det(lattice_d4.gram_rows()) == 1
    assert not is_even(lattice_d4)
    counts = short_vectors(lattice_d4, 3).counts_by_norm
    assert 1 not in counts and 2 not in counts
    assert min(counts) == 3
    assert time.time() - start <= 120
    report(1, "A_4 of the (I|S) code is odd, unimodular, root-free, min norm 3")


def test_criterion_2_leech_identification(lattice_c4):
    start = time.time()
    assert is_unimodular(lattice_c4)
    assert is_even(lattice_c4)
    assert min_norm(lattice_c4) == 4
    assert time.time() - start <= 120
    report(2, "A_4 of the (I|2I+S) code is even unimodular with min norm 4")


def test_criterion_3_z11_route(lattice_c11):
    start = time.time()
    code = code_c11()
    gen = code.generator_rows()
    for u in gen:
        for v in gen:
            assert sum(a * b for a, b in zip(u, v)) % 11 == 0
    assert is_self_dual(code)  # includes |C| = 11^12 via the HNF index
    assert min_norm(lattice_c11) == 3
    assert time.time() - start <= 300
    report(3, "the Z_11 code is self-dual and its lattice has min norm 3")


def test_criterion_4_theta_expansion():
    start = time.time()
    series = quaternary_theta(congruence_gram(), 13)
    assert series.coefficients(13) == [1, 0, 0, 4, 4, 4, 4, 8, 12, 12, 4, 0, 16, 8]
    assert time.time() - start <= 1
    report(4, "quaternary theta coefficients 0..13 match exactly")


def test_criterion_5_identity_at_full_bound():
    start = time.time()
    holds, first = identity_check(1388)
    assert holds and first is None
    assert time.time() - start <= 120
    report(5, "5 a(n) = 4 (sigma_1(n) - b(n)) on gcd(n,22)=1 up to n=1388")


def test_criterion_6_positivity_and_coefficient_bound():
    start = time.time()
    n = 1388
    a = quaternary_theta(congruence_gram(), n).coefficients(n)
    b = b_series(n)
    for p in _primes_upto(n):
        assert b.coefficient(p) ** 2 < 4 * p
        if p == 2 or p == 11:
            continue
        assert a[p] > 0
        assert 5 * a[p] == 4 * (p + 1 - b.coefficient(p))
    assert time.time() - start <= 120
    report(6, "a(p) > 0, 5a(p) = 4(p+1-b(p)), and b(p)^2 < 4p for p <= 1388")


def test_criterion_7_frames_for_all_k_up_to_200():
    start = time.time()
    for k in range(3, 201):
        cert = build_frame(k)
        assert cert.k == k
        scale = _AMBIENT_SCALE[cert.ambient]
        vecs = cert.vectors
        for i in range(24):
            for j in range(i, 24):
                want = scale * k if i == j else 0
                assert linalg.dot(vecs[i], vecs[j]) == want
        assert verify_frame(cert)  # Gram again plus code-lattice membership
    assert time.time() - start <= 300
    report(7, "verified frames of every norm k = 3..200 (covers the prior k <= 97)")


def test_criterion_8_code_extraction_round_trip():
    start = time.time()
    for k in (3, 4, 5, 7, 11, 22, 97):
        code = extract_code(build_frame(k))
        assert code.modulus == k
        assert is_self_dual(code)
        assert min_norm(construction_a(code)) == 3
    assert time.time() - start <= 600
    report(8, "extracted self-dual Z_k codes rebuild a min-norm-3 lattice, k in {3,4,5,7,11,22,97}")


def test_criterion_9_property_suites(lattice_d4):
    start = time.time()
    n = 2000
    assert (
        eta_product([(4, 8), (2, -4)], n).coefficients(n)
        == sigma1_series(n).coefficients(n)
    )

    rng = np.random.default_rng(20240809)
    eye = np.eye(24, dtype=np.int64)
    for _ in range(1000):
        a, b = int(rng.integers(-40, 41)), int(rng.integers(-40, 41))
        d = a + 4 * int(rng.integers(-10, 11))
        c = b + 4 * int(rng.integers(-10, 11))
        rep = QuaternaryRep(a, b, c, d)
        p = np.array(p_matrix(rep), dtype=np.int64)
        assert (p @ p.T == rep.value * eye).all()

    base = standard_frame_11()
    composed = multiply_frame(multiply_frame(base, 6), 5)
    assert composed.k == 11 * 6 * 5
    assert verify_frame(composed)

    g = lattice_d4.gram_rows()
    w = linalg.identity(24)
    mix = np.random.default_rng(3)
    for _ in range(72):
        i, j = mix.integers(0, 24, size=2)
        if i != j:
            c = int(mix.integers(-2, 3))
            w[int(i)] = [x + c * y for x, y in zip(w[int(i)], w[int(j)])]
    assert abs(linalg.det(w)) == 1
    g2 = linalg.matmul(w, linalg.matmul(g, linalg.transpose(w)))
    assert short_vectors(g2, 3).counts_by_norm == short_vectors(g, 3).counts_by_norm

    assert time.time() - start <= 300
    report(9, "eta/sigma equality to 2000, 1000 block-matrix identities, "
              "norm composition, enumeration invariance")
