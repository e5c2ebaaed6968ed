"""Tests for the Sp-basic complexes."""

import pytest

from algebra.hamiltonian import AlgebraVariant, Generator
from algebra.linalg import QVector, mat_mul, rank
from complexes.cochains import (REVERSED_ORDER, Cochain, WedgeMonomial, apply_differential, is_sp_basic,
                                generator_differential, wedge_omega)
from complexes.sp_basic import (ComplexSettings, SpBasicComplex, complex_for, coordinates, differential_matrix,
                                enumerate_monomials, get_complex, sp_basic_subspace)
from errors import GradingError

HAM0_W10_DIMS = {2: 1, 3: 3, 4: 9, 5: 12, 6: 4}
HAM_W8_DIMS = {3: 5, 4: 13, 5: 17, 6: 18, 7: 14, 8: 4}


@pytest.fixture(scope='module')
def ham0_w10():
    return get_complex(AlgebraVariant.HAM0, 10)


def test_enumeration_is_strict_and_graded():
    monomials = enumerate_monomials(AlgebraVariant.HAM0, 3, 6)
    assert monomials, "C^3 of weight 6 is nonempty"
    for m in monomials:
        assert list(m) == sorted(set(m)), "Factors strictly increasing"
        assert m.weight == 6 and m.degree == 3
        assert all(g.degree != 2 for g in m)
    assert monomials == sorted(monomials), "Lexicographic order"
    assert enumerate_monomials(AlgebraVariant.HAM0, 1, 1) == [WedgeMonomial([Generator(3, a)]) for a in range(4)]


def test_reversed_enumeration_is_same_set():
    forward = enumerate_monomials(AlgebraVariant.HAM, 3, 4)
    backward = enumerate_monomials(AlgebraVariant.HAM, 3, 4, REVERSED_ORDER)
    assert sorted(tuple(sorted(m)) for m in backward) == sorted(tuple(m) for m in forward)
    assert all(REVERSED_ORDER.is_canonical(m) for m in backward)


def test_ham0_weight_10_dimensions(ham0_w10):
    for k, dim in HAM0_W10_DIMS.items():
        assert ham0_w10.dimension(k) == dim, f"dim C^{k}"
    assert ham0_w10.dimension(1) == 0
    assert ham0_w10.dimension(7) == 0


def test_basis_elements_are_sp_basic(ham0_w10):
    for k in (2, 3, 5):
        basis = ham0_w10.basis(k)
        for i, element in enumerate(basis):
            assert is_sp_basic(element), "Killed by e, h and f"
            assert coordinates(element, basis) == QVector.unit(basis.dimension, i)


def test_differential_lands_in_sp_basic(ham0_w10):
    for element in ham0_w10.basis(4):
        assert is_sp_basic(apply_differential(element))


def test_d_squared_matrix_zero(ham0_w10):
    for k in range(2, 6):
        product = mat_mul(ham0_w10.differential_matrix(k + 1), ham0_w10.differential_matrix(k))
        assert product.is_zero(), f"d^2 on C^{k}"
    assert ham0_w10.differential_matrix(5).shape == (4, 12)
    assert ham0_w10.differential_matrix(4).shape == (12, 9)


def test_coordinates_rejects_non_invariant(ham0_w10):
    monomial = ham0_w10.monomials(2)[0]
    c = Cochain({monomial: 1}, 2, 10, AlgebraVariant.HAM0)
    if not is_sp_basic(c):
        with pytest.raises(GradingError):
            coordinates(c, ham0_w10.basis(2))
    with pytest.raises(GradingError):
        coordinates(Cochain.zero(3, 10, AlgebraVariant.HAM0), ham0_w10.basis(2))


def test_reversed_order_same_dimensions():
    reversed_cx = complex_for(ComplexSettings(variant=AlgebraVariant.HAM0, weight=10, reverse_order=True))
    for k, dim in HAM0_W10_DIMS.items():
        assert reversed_cx.dimension(k) == dim


def test_small_weight_degree_range():
    cx = SpBasicComplex(AlgebraVariant.HAM, 2)
    first, last = cx.degree_range()
    assert first <= last
    assert all(cx.dimension(k) == 0 for k in range(first))


@pytest.mark.slow
def test_ham_weight_8_dimensions():
    cx = get_complex(AlgebraVariant.HAM, 8)
    for k, dim in HAM_W8_DIMS.items():
        assert cx.dimension(k) == dim, f"dim C^{k}"
    for k in range(3, 8):
        assert mat_mul(cx.differential_matrix(k + 1), cx.differential_matrix(k)).is_zero()


def test_module_level_entry_points(ham0_w10):
    basis = sp_basic_subspace(AlgebraVariant.HAM0, 5, 10)
    assert basis.dimension == 12
    assert (basis.degree, basis.weight, basis.variant) == (5, 10, AlgebraVariant.HAM0)
    assert sp_basic_subspace(AlgebraVariant.HAM0, 1, 10).dimension == 0, "Single generators carry no invariants"
    d4 = differential_matrix(AlgebraVariant.HAM0, 4, 10)
    assert d4.shape == (12, 9)
    assert rank(d4) == 7
    assert rank(differential_matrix(AlgebraVariant.HAM0, 5, 10)) == 4
    assert differential_matrix(AlgebraVariant.HAM0, 6, 10).is_zero(), "C^7 is empty"
    for j, element in enumerate(basis):
        column = coordinates(apply_differential(element), sp_basic_subspace(AlgebraVariant.HAM0, 6, 10))
        assert column == differential_matrix(AlgebraVariant.HAM0, 5, 10).column(j), \
            "Monomial-level coboundary agrees with the matrix"


def test_fresh_builds_are_identical():
    first = SpBasicComplex(AlgebraVariant.HAM0, 10)
    generator_differential.cache_clear()
    second = SpBasicComplex(AlgebraVariant.HAM0, 10)
    for k in range(2, 7):
        assert first.basis(k).elements == second.basis(k).elements, f"basis of C^{k}"
        assert first.basis(k).anchors == second.basis(k).anchors
    for k in range(2, 6):
        assert first.differential_matrix(k) == second.differential_matrix(k), f"d on C^{k}"


def test_wedge_omega_keeps_sp_basic(ham0_w10):
    for element in ham0_w10.basis(5):
        image = wedge_omega(element)
        assert (image.degree, image.weight) == (7, 8)
        assert is_sp_basic(image), "omega is invariant"
    assert wedge_omega(Cochain.zero(5, 10, AlgebraVariant.HAM0)).is_zero()
