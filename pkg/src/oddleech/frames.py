"""Orthogonal frames of norm k in the odd Leech lattice, as certificates.

A frame certificate holds 24 integer vectors in one of two scaled ambient
realizations of the lattice (the Z_4 route through the code with generator
(I | S), or the Z_11 route through the negacirculant code), such that the
pairwise inner products are exactly scale * k * delta_ij and every vector
reduces mod the scale to a codeword of the ambient code.  Construction
goes through a representation 4k = a^2 + 11 b^2 + c^2 + 11 d^2 with
a = d, b = c (mod 4) whenever one exists, and otherwise through a divisor
of k and a norm-multiplying step built from quaternion 4x4 blocks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import isqrt

from . import linalg
from .codes import ZkCode, code_c11, code_d4, is_self_dual, make_code, mckay_s, membership
from .construction import LatticeRep, construction_a


@dataclass(frozen=True)
class QuaternaryRep:
    """Integers with a = d, b = c (mod 4); represents (a^2+11b^2+c^2+11d^2)/4."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if (self.a - self.d) % 4 or (self.b - self.c) % 4:
            raise ValueError("need a = d (mod 4) and b = c (mod 4)")
        if self.value % 4:
            raise ValueError("form value must be divisible by 4")

    @property
    def value(self) -> int:
        return self.a**2 + 11 * self.b**2 + self.c**2 + 11 * self.d**2

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class FourSquares:
    """Non-negative w >= x >= y >= z with w^2 + x^2 + y^2 + z^2 = m."""

    w: int
    x: int
    y: int
    z: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.w, self.x, self.y, self.z)


@dataclass
class FrameCertificate:
    """24 pairwise-orthogonal vectors of scaled norm scale*k in an ambient
    code lattice, plus the construction trace."""

    k: int
    ambient: str  # "D4" or "C11"
    vectors: list[list[int]]
    provenance: list[dict] = field(default_factory=list)


_AMBIENT_SCALE = {"D4": 4, "C11": 11}


def ambient_code(name: str) -> ZkCode:
    if name == "D4":
        return code_d4()
    if name == "C11":
        return code_c11()
    raise ValueError(f"unknown ambient {name!r}")


@lru_cache(maxsize=None)
def ambient_lattice(name: str) -> LatticeRep:
    return construction_a(ambient_code(name), code_id=name)


def represent_quaternary(k: int) -> QuaternaryRep | None:
    """A representation 4k = a^2 + 11 b^2 + c^2 + 11 d^2 with the frame
    congruences, or None if none exists.

    The search box |a|,|c| <= 2 sqrt(k), |b|,|d| <= 2 sqrt(k/11) is
    exhaustive.  Among all solutions the returned one minimizes
    (|b|+|d|, |c|, |a|, sign penalties): fewest skew blocks first, then the
    smallest off-diagonal identity content, preferring non-negative entries.
    That makes certificates reproducible run to run.
    """
    target = 4 * k
    amax = isqrt(target)
    bmax = isqrt(target // 11)
    solutions: list[tuple[int, int, int, int]] = []
    for a in range(-amax, amax + 1):
        ra = target - a * a
        for b in range(-bmax, bmax + 1):
            rab = ra - 11 * b * b
            if rab < 0:
                continue
            for d in range(-bmax, bmax + 1):
                if (a - d) % 4:
                    continue
                rem = rab - 11 * d * d
                if rem < 0:
                    continue
                c = isqrt(rem)
                if c * c != rem:
                    continue
                for cc in {c, -c}:
                    if (b - cc) % 4 == 0:
                        solutions.append((a, b, cc, d))
    if not solutions:
        return None

    def key(t: tuple[int, int, int, int]):
        a, b, c, d = t
        return (abs(b) + abs(d), abs(c), abs(a), a < 0, b < 0, c < 0, d < 0, t)

    return QuaternaryRep(*min(solutions, key=key))


def p_matrix(rep: QuaternaryRep) -> linalg.Matrix:
    """24x24 block matrix (aI+bS, cI+dS; -cI+dS, aI-bS) with
    P P^T = (a^2 + 11 b^2 + c^2 + 11 d^2) I."""
    s = mckay_s()
    a, b, c, d = rep.as_tuple()
    rows = []
    for i in range(12):
        left = [(a if i == j else 0) + b * s[i][j] for j in range(12)]
        right = [(c if i == j else 0) + d * s[i][j] for j in range(12)]
        rows.append(left + right)
    for i in range(12):
        left = [(-c if i == j else 0) + d * s[i][j] for j in range(12)]
        right = [(a if i == j else 0) - b * s[i][j] for j in range(12)]
        rows.append(left + right)
    return rows


def frame_from_representation(rep: QuaternaryRep) -> FrameCertificate:
    """Frame of norm value/4 in the Z_4 ambient, vectors = rows of P."""
    k, rem = divmod(rep.value, 4)
    if rem:
        raise ValueError("representation value not divisible by 4")
    if k < 3:
        raise ValueError("frames of norm below 3 do not exist in this lattice")
    cert = FrameCertificate(
        k=k,
        ambient="D4",
        vectors=p_matrix(rep),
        provenance=[
            {"step": "quaternary_representation", "k": k, "rep": list(rep.as_tuple())}
        ],
    )
    _check_certificate(cert)
    return cert


def standard_frame_11() -> FrameCertificate:
    """The norm-11 frame 11*e_1, ..., 11*e_24 in the Z_11 ambient."""
    cert = FrameCertificate(
        k=11,
        ambient="C11",
        vectors=[[11 if i == j else 0 for j in range(24)] for i in range(24)],
        provenance=[{"step": "standard_frame", "k": 11}],
    )
    _check_certificate(cert)
    return cert


def four_squares(m: int) -> FourSquares:
    """Some decomposition m = w^2 + x^2 + y^2 + z^2, w >= x >= y >= z >= 0."""
    if m < 1:
        raise ValueError("m must be positive")
    for w in range(isqrt(m), -1, -1):
        rw = m - w * w
        for x in range(min(w, isqrt(rw)), -1, -1):
            rx = rw - x * x
            for y in range(min(x, isqrt(rx)), -1, -1):
                ry = rx - y * y
                z = isqrt(ry)
                if z * z == ry and z <= y:
                    return FourSquares(w, x, y, z)
    raise AssertionError("four-square decomposition must exist")


def _quaternion_block(fs: FourSquares) -> linalg.Matrix:
    w, x, y, z = fs.as_tuple()
    return [
        [w, x, y, z],
        [-x, w, -z, y],
        [-y, z, w, -x],
        [-z, -y, x, w],
    ]


def multiply_frame(cert: FrameCertificate, m: int) -> FrameCertificate:
    """Frame of norm k*m from a frame of norm k, in the same ambient.

    The 24 vectors are split into 6 quadruples and each quadruple is
    replaced by its image under a 4x4 integer quaternion matrix Q with
    Q Q^T = m I; the new vectors are integer combinations of the old, so
    they stay in the ambient lattice, and the Gram scales by m.
    """
    if m < 1:
        raise ValueError("multiplier must be positive")
    if not verify_frame(cert):
        raise ValueError("input certificate is invalid")
    fs = four_squares(m)
    q = _quaternion_block(fs)
    new_vectors: list[list[int]] = []
    for base in range(0, 24, 4):
        quad = cert.vectors[base : base + 4]
        for qrow in q:
            new_vectors.append(
                [
                    sum(qrow[t] * quad[t][j] for t in range(4))
                    for j in range(24)
                ]
            )
    out = FrameCertificate(
        k=cert.k * m,
        ambient=cert.ambient,
        vectors=new_vectors,
        provenance=cert.provenance
        + [
            {
                "step": "multiply",
                "factor": m,
                "squares": list(fs.as_tuple()),
                "k": cert.k * m,
            }
        ],
    )
    _check_certificate(out)
    return out


def _route_divisor(k: int) -> int:
    """Divisor k0 of k with a guaranteed base frame: the smallest odd prime
    factor != 11 if any, else 4 for powers of two, else 11."""
    rest = k
    while rest % 2 == 0:
        rest //= 2
    p = 3
    while p * p <= rest:
        if rest % p == 0:
            if p != 11:
                return p
            while rest % 11 == 0:
                rest //= 11
            continue
        p += 2
    if rest > 1 and rest != 11:
        return rest
    if k == 2 ** (k.bit_length() - 1):
        return 4
    if k % 11 == 0:
        return 11
    raise AssertionError(f"divisor dispatch failed to cover k={k}")


def build_frame(k: int) -> FrameCertificate:
    """A verified orthogonal frame of norm k, for any k >= 3.

    Prefers a direct quaternary representation (shortest provenance); when
    none exists, builds a frame for a divisor k0 of k (odd prime != 11,
    else 4, else 11) and multiplies the norm by k/k0.
    """
    if k < 3:
        raise ValueError("the lattice has minimum norm 3; need k >= 3")
    rep = represent_quaternary(k)
    if rep is not None:
        return frame_from_representation(rep)
    k0 = _route_divisor(k)
    if k0 == 11:
        base = standard_frame_11()
    else:
        rep0 = represent_quaternary(k0)
        if rep0 is None:
            raise AssertionError(f"no representation for base divisor {k0}")
        base = frame_from_representation(rep0)
    if k == k0:
        return base
    return multiply_frame(base, k // k0)


def _check_certificate(cert: FrameCertificate) -> None:
    ok_gram, ok_membership = _frame_checks(cert)
    if not ok_gram:
        raise ValueError("frame Gram matrix is not scale*k*I")
    if not ok_membership:
        raise ValueError("some frame vector is not in the ambient code lattice")


def _frame_checks(cert: FrameCertificate) -> tuple[bool, bool]:
    if cert.ambient not in _AMBIENT_SCALE:
        return False, False
    scale = _AMBIENT_SCALE[cert.ambient]
    vecs = cert.vectors
    if cert.k < 3 or len(vecs) != 24 or any(len(v) != 24 for v in vecs):
        return False, False
    target = scale * cert.k
    gram_ok = True
    for i in range(24):
        vi = vecs[i]
        for j in range(i, 24):
            want = target if i == j else 0
            if linalg.dot(vi, vecs[j]) != want:
                gram_ok = False
                break
        if not gram_ok:
            break
    code = ambient_code(cert.ambient)
    membership_ok = all(
        membership(code, [x % scale for x in v]) for v in vecs
    )
    return gram_ok, membership_ok


def verify_frame(cert: FrameCertificate) -> bool:
    """Recompute both certificate invariants from scratch."""
    gram_ok, membership_ok = _frame_checks(cert)
    return gram_ok and membership_ok


def frame_check_report(cert: FrameCertificate) -> dict:
    gram_ok, membership_ok = _frame_checks(cert)
    return {"gram_ok": gram_ok, "membership_ok": membership_ok}


def extract_code(cert: FrameCertificate) -> ZkCode:
    """The self-dual Z_k code carried by a frame of norm k.

    For each basis row v of the ambient lattice, the word
    ((v . f_j) / scale mod k)_j records the frame coordinates of v; the row
    span of those words mod k is a self-dual Z_k code whose Construction A
    lattice is the ambient lattice again.  Self-duality is verified before
    returning.
    """
    if not verify_frame(cert):
        raise ValueError("cannot extract a code from an invalid certificate")
    scale = _AMBIENT_SCALE[cert.ambient]
    k = cert.k
    basis = ambient_lattice(cert.ambient).basis_rows()
    words = []
    for v in basis:
        word = []
        for f in cert.vectors:
            q, r = divmod(linalg.dot(v, f), scale)
            if r:
                raise ValueError(
                    "inner product not divisible by the ambient scale; "
                    "corrupt certificate"
                )
            word.append(q % k)
        words.append(word)
    code = make_code(k, words)
    if not is_self_dual(code):
        raise ValueError("extracted code failed the self-duality check")
    return code


# --- JSON certificate schema (version 1) ---------------------------------

_INT_LIMIT = 2**53 - 1


def _encode_int(v: int):
    return v if -_INT_LIMIT <= v <= _INT_LIMIT else str(v)


def _decode_int(v) -> int:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ValueError(f"expected integer or decimal string, got {v!r}")
    return int(v)


def certificate_to_dict(cert: FrameCertificate) -> dict:
    scale = _AMBIENT_SCALE[cert.ambient]
    gram_ok, membership_ok = _frame_checks(cert)
    return {
        "version": 1,
        "k": _encode_int(cert.k),
        "ambient": {"code": cert.ambient, "modulus": scale, "scale": scale},
        "vectors": [[_encode_int(x) for x in v] for v in cert.vectors],
        "provenance": cert.provenance,
        "checks": {"gram_ok": gram_ok, "membership_ok": membership_ok},
    }


def certificate_from_dict(data: dict) -> FrameCertificate:
    if not isinstance(data, dict):
        raise ValueError("certificate must be a JSON object")
    if data.get("version") != 1:
        raise ValueError("unsupported certificate version")
    ambient = data.get("ambient")
    if not isinstance(ambient, dict) or ambient.get("code") not in _AMBIENT_SCALE:
        raise ValueError("certificate has no recognizable ambient")
    name = ambient["code"]
    scale = _AMBIENT_SCALE[name]
    if ambient.get("modulus") != scale or ambient.get("scale") != scale:
        raise ValueError("ambient modulus/scale do not match the named code")
    vectors = data.get("vectors")
    if not isinstance(vectors, list) or len(vectors) != 24:
        raise ValueError("certificate must carry exactly 24 vectors")
    decoded = []
    for v in vectors:
        if not isinstance(v, list) or len(v) != 24:
            raise ValueError("each frame vector must have 24 entries")
        decoded.append([_decode_int(x) for x in v])
    provenance = data.get("provenance", [])
    if not isinstance(provenance, list):
        raise ValueError("provenance must be a list")
    return FrameCertificate(
        k=_decode_int(data.get("k")),
        ambient=name,
        vectors=decoded,
        provenance=provenance,
    )


def dumps_canonical(obj: dict) -> str:
    """Deterministic JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, separators=(", ", ": ")) + "\n"
