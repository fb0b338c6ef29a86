"""Construction A: from a self-dual Z_k code to an exact unimodular lattice.

The lattice (1/sqrt(k)) * (rho(C) + k Z^n) is represented by an integer
basis B of the scaled lattice K = rho(C) + k Z^n together with the scale k;
the Gram matrix of the unimodular lattice is (B * B^T) / k, which is
integral exactly when C is self-orthogonal.  Everything stays in integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .codes import ZkCode, is_self_dual


@dataclass(frozen=True)
class LatticeRep:
    """Integer basis of the scaled lattice K = rho(C) + k Z^n, plus its
    unimodular Gram (B B^T)/k."""

    scale: int
    basis: tuple[tuple[int, ...], ...]
    gram_scaled: tuple[tuple[int, ...], ...]
    source_code_id: str | None = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_rows(self) -> linalg.Matrix:
        return [list(row) for row in self.basis]

    def gram_rows(self) -> linalg.Matrix:
        return [list(row) for row in self.gram_scaled]

    def to_json_dict(self) -> dict:
        return {
            "scale": self.scale,
            "basis": self.basis_rows(),
            "gram": self.gram_rows(),
        }


def lattice_rep(scale: int, basis: linalg.Matrix, source_code_id: str | None = None) -> LatticeRep:
    gram = linalg.gram(basis, scale)
    return LatticeRep(
        scale=scale,
        basis=tuple(tuple(row) for row in basis),
        gram_scaled=tuple(tuple(row) for row in gram),
        source_code_id=source_code_id,
    )


def construction_a(code: ZkCode, code_id: str | None = None) -> LatticeRep:
    """Exact integral representation of the Construction A lattice A_k(C).

    The basis is the (canonical) square HNF basis of the row span of
    rho(generator) stacked over k*I_n.  Unimodularity (det Gram = 1) is
    verified before returning.
    """
    if not is_self_dual(code):
        raise ValueError("Construction A here requires a self-dual code")
    k, n = code.modulus, code.length
    stacked = code.generator_rows() + [
        [k if i == j else 0 for j in range(n)] for i in range(n)
    ]
    h, rank = linalg.hnf(stacked)
    if rank != n:
        raise ValueError("code basis did not span a full-rank lattice")
    rep = lattice_rep(k, h, source_code_id=code_id)
    if linalg.det(rep.gram_rows()) != 1:
        raise ValueError("Gram determinant is not 1; input code not self-dual")
    return rep


def min_norm_formula(code: ZkCode, d_e: int) -> Fraction:
    """min(k, d_E(C)/k), the minimum norm of A_k(C)."""
    return min(Fraction(code.modulus), Fraction(d_e, code.modulus))
