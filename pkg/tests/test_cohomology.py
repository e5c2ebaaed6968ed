"""Tests for Betti tables, representatives and the omega-wedge check."""

import numpy as np
import pytest

from algebra.groebner import LinearForm, normal_form
from algebra.hamiltonian import AlgebraVariant
from algebra.linalg import QVector, mat_vec
from cohomology import (HamiltonianCohomology, betti_table, cohomology_representative, image_gb,
                        kontsevich_check, self_test)
from complexes.cochains import REVERSED_ORDER, apply_differential, generator_differential
from complexes.sp_basic import coordinates, get_complex


def _columns(rows):
    return ([r.dim for r in rows], [r.rank_in for r in rows], [r.betti for r in rows])


def test_ham0_weight_10_table():
    rows = betti_table(AlgebraVariant.HAM0, 10, (2, 6))
    dims, ranks, betti = _columns(rows)
    assert dims == [1, 3, 9, 12, 4]
    assert ranks == [0, 1, 2, 7, 4], "Rank of the map into each C^k"
    assert betti == [0, 0, 0, 1, 0]
    for r in rows:
        assert r.betti == r.dim - r.rank_in - r.rank_out


def test_full_range_euler_characteristic():
    rows = betti_table(AlgebraVariant.HAM0, 10)
    assert sum(r.betti for r in rows) == 1
    assert (sum((-1) ** r.degree * r.dim for r in rows)
            == sum((-1) ** r.degree * r.betti for r in rows))


def test_vanishing_weight_2():
    assert all(r.betti == 0 for r in betti_table(AlgebraVariant.HAM, 2))


@pytest.mark.slow
@pytest.mark.parametrize('weight', [4, 6])
def test_vanishing_sweep(weight):
    assert all(r.betti == 0 for r in betti_table(AlgebraVariant.HAM, weight))


def test_representative_of_degree_5():
    representatives = cohomology_representative(AlgebraVariant.HAM0, 10, 5)
    assert len(representatives) == 1, "H^5 is one-dimensional"
    h = representatives[0]
    assert apply_differential(h).is_zero()
    cx = get_complex(AlgebraVariant.HAM0, 10)
    gb_e = image_gb(cx.differential_matrix(4))
    vector = coordinates(h, cx.basis(5))
    assert not normal_form(LinearForm.from_vector(gb_e.order, vector), gb_e).is_zero(), \
        "Representative is not a coboundary"
    assert cohomology_representative(AlgebraVariant.HAM0, 10, 4) == []


def test_representative_is_reproducible():
    first = cohomology_representative(AlgebraVariant.HAM0, 10, 5)
    first_table = betti_table(AlgebraVariant.HAM0, 10)
    get_complex.cache_clear()
    generator_differential.cache_clear()
    cohomology = HamiltonianCohomology()
    assert cohomology.complex(AlgebraVariant.HAM0, 10) is get_complex(AlgebraVariant.HAM0, 10)
    assert cohomology.cohomology_representative(AlgebraVariant.HAM0, 10, 5) == first, \
        "A rebuilt complex yields the same representative"
    assert cohomology.betti_table(AlgebraVariant.HAM0, 10) == first_table


def test_reversed_cohomology_uses_reversed_complex():
    cx = HamiltonianCohomology(reverse_order=True).complex(AlgebraVariant.HAM0, 10)
    assert cx.order == REVERSED_ORDER
    assert cx is get_complex(AlgebraVariant.HAM0, 10, REVERSED_ORDER)


@pytest.mark.slow
def test_ham_weight_8_table():
    dims, ranks, betti = _columns(betti_table(AlgebraVariant.HAM, 8, (3, 8)))
    assert dims == [5, 13, 17, 18, 14, 4]
    assert ranks == [0, 5, 8, 9, 9, 4]
    assert betti == [0, 0, 0, 0, 1, 0]


@pytest.mark.slow
def test_coboundaries_are_absorbed():
    cx = get_complex(AlgebraVariant.HAM, 8)
    d6 = cx.differential_matrix(6)
    gb_e = image_gb(d6)
    rng = np.random.default_rng(3)
    b = QVector(int(x) for x in rng.integers(-5, 6, size=d6.cols))
    residual = normal_form(LinearForm.from_vector(gb_e.order, mat_vec(d6, b)), gb_e)
    assert residual.is_zero(), "d(b) lies in the image"


@pytest.mark.slow
def test_kontsevich_check():
    certificate = kontsevich_check()
    assert certificate.verdict, "omega ^ h is not a coboundary"
    assert not certificate.residual.is_zero()
    assert certificate.is_cocycle
    assert certificate.well_defined
    assert certificate.rank_image == 9
    assert certificate.rank_with_kernel == 10
    assert certificate.kernel_dimension == 8


@pytest.mark.slow
def test_reversed_order_self_test():
    results = self_test()
    assert results == {'betti.ham0.w10': True, 'betti.ham.w8': True, 'verdict': True}
    assert kontsevich_check(reverse_order=True).reversed_order
