"""Construction A lattices and the minimum-norm formula."""

from fractions import Fraction

import pytest

from oddleech import linalg
from oddleech.codes import code_d4, make_code, membership
from oddleech.construction import construction_a, min_norm_formula


def test_unimodular_gram(lattice_d4, lattice_c4, lattice_c11):
    for lat in (lattice_d4, lattice_c4, lattice_c11):
        g = lat.gram_rows()
        assert linalg.is_symmetric(g)
        assert linalg.det(g) == 1


def test_leech_route_has_even_diagonal(lattice_c4):
    assert all(row[i] % 2 == 0 for i, row in enumerate(lattice_c4.gram_scaled))


def test_basis_rows_reduce_into_code(lattice_d4, lattice_c11):
    for lat in (lattice_d4, lattice_c11):
        from oddleech.codes import code_c11, code_d4

        code = code_d4() if lat.scale == 4 else code_c11()
        for row in lat.basis_rows():
            assert membership(code, [x % lat.scale for x in row])


def test_basis_is_canonical_hnf(lattice_d4):
    basis = lattice_d4.basis_rows()
    h, rank = linalg.hnf(basis)
    assert rank == 24 and h == basis


def test_requires_self_dual():
    bad = make_code(4, [[1, 0, 1, 0], [0, 1, 0, 1]])
    with pytest.raises(ValueError):
        construction_a(bad)


def test_min_norm_formula():
    from oddleech.codes import code_c4, code_c11

    assert min_norm_formula(code_d4(), 12) == 3
    assert min_norm_formula(code_c4(), 16) == 4
    assert min_norm_formula(code_c11(), 33) == 3
    assert min_norm_formula(code_c11(), 40) == Fraction(40, 11)


def test_json_shape(lattice_d4):
    d = lattice_d4.to_json_dict()
    assert set(d) == {"scale", "basis", "gram"}
    assert d["scale"] == 4
    assert len(d["basis"]) == 24 and len(d["gram"]) == 24
