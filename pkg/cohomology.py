"""Betti tables, cohomology representatives and the omega-wedge check.

Builds the Sp-basic complexes on demand and feeds their coboundary
matrices to the linear Gröbner engine.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from algebra.groebner import (GroebnerBasis, LinearForm, VarOrder, forms_from_columns,
                              gb_linear, kernel_via_normal_form, normal_form, quotient_gb)
from algebra.hamiltonian import AlgebraVariant
from algebra.linalg import (QMatrix, QVector, hstack, in_column_span, mat_vec,
                            nullspace_basis, rank)
from complexes.cochains import Cochain, apply_differential, wedge_omega
from complexes.sp_basic import (ComplexSettings, GradedBasis, SpBasicComplex, complex_for,
                                coordinates)
from errors import GradingError

LOGGER = logging.getLogger(__name__)

# source and target of the omega-wedge map on cohomology
SOURCE = (AlgebraVariant.HAM0, 10, 5)
TARGET = (AlgebraVariant.HAM, 8, 7)


@dataclass(frozen=True)
class BettiRow:
    """One column of a Betti table."""
    degree: int
    dim: int
    rank_in: int
    rank_out: int
    betti: int


@dataclass
class TheoremCertificate:
    """Outcome of the omega-wedge check on the source class."""
    h: Cochain
    image_vector: QVector
    residual: QVector
    verdict: bool
    is_cocycle: bool = False
    well_defined: bool = False
    rank_image: int = 0
    rank_with_kernel: int = 0
    kernel_dimension: int = 0
    reversed_order: bool = False
    notes: List[str] = field(default_factory=list)


def y_order(dimension: int) -> VarOrder:
    return VarOrder.numbered('y', dimension)


def c_order(dimension: int) -> VarOrder:
    return VarOrder.numbered('c', dimension)


def image_gb(d_in: QMatrix) -> GroebnerBasis:
    """Basis of d(C^(k-1)) in the y-variables of C^k."""
    order = y_order(d_in.rows)
    return gb_linear(forms_from_columns(d_in, order), order)


def kernel_gb(d_out: QMatrix) -> GroebnerBasis:
    """Basis of ker(d: C^k -> C^(k+1)) in the y-variables of C^k."""
    order = y_order(d_out.cols)
    forms = kernel_via_normal_form(d_out, c_order(d_out.cols), order)
    return gb_linear([f for f in forms if not f.is_zero()], order)


class HamiltonianCohomology:
    """Cohomology of the Sp-basic complexes of ham and ham0."""

    def __init__(self, reverse_order: bool = False):
        self.reverse_order = reverse_order

    def complex(self, variant: AlgebraVariant, weight: int) -> SpBasicComplex:
        return complex_for(ComplexSettings(AlgebraVariant(variant), weight, self.reverse_order))

    def _incoming(self, cx: SpBasicComplex, k: int) -> QMatrix:
        if k <= 0:
            return QMatrix.zeros(cx.dimension(k), 0)
        return cx.differential_matrix(k - 1)

    def betti_table(self, variant: AlgebraVariant, weight: int,
                    degree_range: Optional[Tuple[int, int]] = None) -> List[BettiRow]:
        """Dimensions, ranks and Betti numbers, each Betti number checked three ways.

        Args:
            variant: ham or ham0
            weight: Weight of the graded piece
            degree_range: Inclusive (first, last); defaults to the span of
                nonzero Sp-basic pieces

        Returns:
            One BettiRow per degree
        """
        cx = self.complex(variant, weight)
        full = degree_range is None
        first, last = cx.degree_range() if full else degree_range
        rows = []
        for k in range(first, last + 1):
            d_in = self._incoming(cx, k)
            d_out = cx.differential_matrix(k)
            dim = cx.dimension(k)
            rank_in, rank_out = rank(d_in), rank(d_out)
            betti = dim - rank_in - rank_out
            self._cross_check_betti(cx, k, d_in, d_out, betti)
            rows.append(BettiRow(k, dim, rank_in, rank_out, betti))
            LOGGER.info("%s w=%d C^%d: dim=%d rank_in=%d rank_out=%d betti=%d",
                        cx.variant.value, weight, k, dim, rank_in, rank_out, betti)
        if full:
            euler_dim = sum((-1) ** r.degree * r.dim for r in rows)
            euler_betti = sum((-1) ** r.degree * r.betti for r in rows)
            if euler_dim != euler_betti:
                raise GradingError(f"Euler characteristic mismatch: {euler_dim} != {euler_betti}")
        return rows

    def _cross_check_betti(self, cx: SpBasicComplex, k: int, d_in: QMatrix,
                           d_out: QMatrix, betti: int) -> None:
        if betti < 0:
            raise GradingError(f"negative Betti number at C^{k}: d^2 is not zero")
        if cx.dimension(k) == 0:
            return
        via_groebner = len(quotient_gb(kernel_gb(d_out), image_gb(d_in)))
        kernel = nullspace_basis(d_out)
        if kernel:
            kernel_matrix = QMatrix.from_columns(kernel, d_out.cols)
            via_rank = rank(hstack(d_in, kernel_matrix)) - rank(d_in)
        else:
            via_rank = 0
        if not betti == via_groebner == via_rank:
            raise GradingError(
                f"Betti number of C^{k} disagrees: linear algebra {betti}, "
                f"Gröbner quotient {via_groebner}, rank augmentation {via_rank}")

    def cohomology_gb(self, variant: AlgebraVariant, weight: int, k: int) -> GroebnerBasis:
        """Basis of ker d modulo im d as reduced normal forms in the y-variables of C^k."""
        cx = self.complex(variant, weight)
        return quotient_gb(kernel_gb(cx.differential_matrix(k)), image_gb(self._incoming(cx, k)))

    def cohomology_representative(self, variant: AlgebraVariant, weight: int, k: int) -> List[Cochain]:
        """One cocycle per generator of the cohomology basis, independent modulo coboundaries."""
        cx = self.complex(variant, weight)
        basis = cx.basis(k)
        representatives = []
        for form in self.cohomology_gb(variant, weight, k):
            cochain = basis.combination(form.to_vector())
            if not apply_differential(cochain).is_zero():
                raise GradingError(f"representative in C^{k} is not a cocycle")
            representatives.append(cochain)
        return representatives

    def kontsevich_check(self) -> TheoremCertificate:
        """Test whether omega ^ h is a coboundary for the class h of the source piece."""
        source_variant, source_weight, source_k = SOURCE
        target_variant, target_weight, target_k = TARGET
        source = self.complex(source_variant, source_weight)
        target = self.complex(target_variant, target_weight)

        representatives = self.cohomology_representative(source_variant, source_weight, source_k)
        if len(representatives) != 1:
            raise GradingError(
                f"expected a one-dimensional source cohomology, got {len(representatives)}")
        h = representatives[0]
        target_basis = target.basis(target_k)
        image_vector = coordinates(wedge_omega(h), target_basis)

        d_image = target.differential_matrix(target_k - 1)
        d_next = target.differential_matrix(target_k)
        is_cocycle = mat_vec(d_next, image_vector).is_zero()

        gb_e = image_gb(d_image)
        residual_form = normal_form(LinearForm.from_vector(gb_e.order, image_vector), gb_e)
        residual = residual_form.to_vector()

        kernel = nullspace_basis(source.differential_matrix(source_k))
        wedged_kernel = [self._wedge_coordinates(source.basis(source_k), v, target_basis) for v in kernel]
        rank_image = rank(d_image)
        stacked = hstack(QMatrix.from_columns(wedged_kernel, target_basis.dimension), d_image) \
            if wedged_kernel else d_image
        rank_with_kernel = rank(stacked)

        well_defined = self._maps_coboundaries_to_coboundaries(source, target_basis, d_image)

        certificate = TheoremCertificate(
            h=h, image_vector=image_vector, residual=residual, verdict=not residual.is_zero(),
            is_cocycle=is_cocycle, well_defined=well_defined, rank_image=rank_image,
            rank_with_kernel=rank_with_kernel, kernel_dimension=len(kernel),
            reversed_order=self.reverse_order)
        if not is_cocycle:
            certificate.notes.append("omega ^ h is not closed")
        if not well_defined:
            certificate.notes.append("omega ^ d(C^4) leaves d(C^6)")
        LOGGER.info("omega-wedge check: verdict=%s rank %d -> %d",
                    certificate.verdict, rank_image, rank_with_kernel)
        return certificate

    @staticmethod
    def _wedge_coordinates(source_basis: GradedBasis, vector: QVector,
                           target_basis: GradedBasis) -> QVector:
        return coordinates(wedge_omega(source_basis.combination(vector)), target_basis)

    def _maps_coboundaries_to_coboundaries(self, source: SpBasicComplex, target_basis: GradedBasis,
                                           d_image: QMatrix) -> bool:
        _, _, source_k = SOURCE
        d_source = source.differential_matrix(source_k - 1)
        image_columns = d_image.column_list()
        for column in d_source.column_list():
            wedged = self._wedge_coordinates(source.basis(source_k), column, target_basis)
            if in_column_span(image_columns, wedged) is None:
                return False
        return True


_DEFAULT = HamiltonianCohomology()


def betti_table(variant: AlgebraVariant, w: int,
                degree_range: Optional[Tuple[int, int]] = None) -> List[BettiRow]:
    return _DEFAULT.betti_table(variant, w, degree_range)


def cohomology_representative(variant: AlgebraVariant, w: int, k: int) -> List[Cochain]:
    return _DEFAULT.cohomology_representative(variant, w, k)


def kontsevich_check(reverse_order: bool = False) -> TheoremCertificate:
    cohomology = HamiltonianCohomology(reverse_order) if reverse_order else _DEFAULT
    return cohomology.kontsevich_check()


def self_test() -> Dict[str, bool]:
    """Rerun with reversed generator order; Betti tables and verdict must agree."""
    forward, backward = HamiltonianCohomology(False), HamiltonianCohomology(True)
    results = {}
    for variant, weight, _ in (SOURCE, TARGET):
        results[f"betti.{variant.value}.w{weight}"] = (
            forward.betti_table(variant, weight) == backward.betti_table(variant, weight))
    results['verdict'] = forward.kontsevich_check().verdict == backward.kontsevich_check().verdict
    return results
