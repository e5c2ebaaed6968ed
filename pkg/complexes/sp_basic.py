"""Sp-basic weight-graded cochain complexes.

The Sp-basic subspace of C^k_w is the part of the exterior algebra on the
horizontal generators (no degree-2 factor) that is killed by the sl2 action.
The action keeps the multiset of factor degrees, so the invariants are
computed one block of equal degree pattern at a time: first the h-weight
zero monomials, then the joint kernel of e and f on them.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from algebra.hamiltonian import E, F, H, AlgebraVariant, generators_of
from algebra.linalg import QMatrix, QVector, free_columns, nullspace_basis
from complexes.cochains import (DEFAULT_ORDER, REVERSED_ORDER, Cochain, GeneratorOrder,
                                WedgeMonomial, act_on_monomial, apply_differential)
from errors import GradingError

LOGGER = logging.getLogger(__name__)


@dataclass
class ComplexSettings:
    """Which complex to build and how to order its generators."""
    variant: AlgebraVariant = AlgebraVariant.HAM0
    weight: int = 10
    reverse_order: bool = False

    @property
    def order(self) -> GeneratorOrder:
        return REVERSED_ORDER if self.reverse_order else DEFAULT_ORDER


@dataclass(frozen=True)
class GradedBasis:
    """Basis of one Sp-basic graded piece.

    Each element has an anchor monomial where it is the only nonzero
    basis element.
    """
    degree: int
    weight: int
    variant: AlgebraVariant
    order: GeneratorOrder
    elements: Tuple[Cochain, ...]
    anchors: Tuple[WedgeMonomial, ...]
    ambient_dimension: int

    @property
    def dimension(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, index: int) -> Cochain:
        return self.elements[index]

    def __iter__(self):
        return iter(self.elements)

    def combination(self, vector: QVector) -> Cochain:
        """sum_i vector[i] * element_i"""
        if len(vector) != self.dimension:
            raise GradingError(f"{len(vector)} coordinates for a basis of size {self.dimension}")
        result: Dict[WedgeMonomial, Fraction] = {}
        for value, element in zip(vector, self.elements):
            if value == 0:
                continue
            for monomial, coefficient in element.items():
                result[monomial] = result.get(monomial, Fraction(0)) + value * coefficient
        return Cochain(result, self.degree, self.weight, self.variant, self.order)


@lru_cache(maxsize=None)
def _enumerate_default(variant: AlgebraVariant, k: int, w: int) -> Tuple[WedgeMonomial, ...]:
    if k < 0:
        return ()
    if k == 0:
        return (WedgeMonomial(),) if w == 0 else ()
    max_weight = w + 2 if variant is AlgebraVariant.HAM else w
    generators = generators_of(variant, max_weight)
    found: List[WedgeMonomial] = []
    chosen = []

    def extend(start: int, remaining_k: int, remaining_w: int) -> None:
        if remaining_k == 0:
            if remaining_w == 0:
                found.append(WedgeMonomial(chosen))
            return
        for i in range(start, len(generators) - remaining_k + 1):
            g = generators[i]
            # weights are nondecreasing along the generator list
            if g.weight * remaining_k > remaining_w:
                break
            chosen.append(g)
            extend(i + 1, remaining_k - 1, remaining_w - g.weight)
            chosen.pop()

    extend(0, k, w)
    return tuple(found)


def enumerate_monomials(variant: AlgebraVariant, k: int, w: int,
                        order: GeneratorOrder = DEFAULT_ORDER) -> List[WedgeMonomial]:
    """Strictly increasing k-subsets of the generator alphabet of total weight w, lexicographic."""
    variant = AlgebraVariant(variant)
    monomials = _enumerate_default(variant, k, w)
    if not order.reverse:
        return list(monomials)
    flipped = [WedgeMonomial(reversed(m)) for m in monomials]
    return sorted(flipped, key=order.monomial_key)


def max_ambient_degree(variant: AlgebraVariant, w: int) -> int:
    """Upper bound on k with a nonempty ambient space."""
    # ham0 generators have weight >= 1; ham adds only two of weight -1
    return max(w, 0) if AlgebraVariant(variant) is AlgebraVariant.HAM0 else max(w + 4, 0)


def coordinates(c: Cochain, basis: GradedBasis) -> QVector:
    """Exact coordinates of c in basis, verified by reconstruction."""
    if (c.degree, c.weight, c.variant, c.order) != (basis.degree, basis.weight, basis.variant, basis.order):
        raise GradingError(
            f"cochain of (k={c.degree}, w={c.weight}, {c.variant.value}) against basis of "
            f"(k={basis.degree}, w={basis.weight}, {basis.variant.value})")
    values = [c.coefficient(anchor) / element.coefficient(anchor)
              for element, anchor in zip(basis.elements, basis.anchors)]
    vector = QVector(values)
    if basis.combination(vector) != c:
        raise GradingError(
            f"cochain is not in the Sp-basic subspace of C^{basis.degree} "
            f"(w={basis.weight}, {basis.variant.value})")
    return vector


class SpBasicComplex:
    """The Sp-basic complex of one variant and weight."""

    def __init__(self, variant: AlgebraVariant, weight: int, order: GeneratorOrder = DEFAULT_ORDER):
        self.variant = AlgebraVariant(variant)
        self.weight = weight
        self.order = order
        self._bases: Dict[int, GradedBasis] = {}
        self._differentials: Dict[int, QMatrix] = {}

    def monomials(self, k: int) -> List[WedgeMonomial]:
        return enumerate_monomials(self.variant, k, self.weight, self.order)

    def basis(self, k: int) -> GradedBasis:
        cached = self._bases.get(k)
        if cached is None:
            cached = self._bases.setdefault(k, self._compute_basis(k))
        return cached

    def dimension(self, k: int) -> int:
        return self.basis(k).dimension

    def differential_matrix(self, k: int) -> QMatrix:
        """Matrix of d: C^k -> C^(k+1); column j holds d(basis_j) in C^(k+1) coordinates."""
        cached = self._differentials.get(k)
        if cached is None:
            cached = self._differentials.setdefault(k, self._compute_differential(k))
        return cached

    def degree_range(self) -> Tuple[int, int]:
        """Smallest interval of degrees holding every nonzero Sp-basic piece."""
        nonzero = [k for k in range(max_ambient_degree(self.variant, self.weight) + 1)
                   if self.monomials(k) and self.dimension(k) > 0]
        if not nonzero:
            return (0, 0)
        return (nonzero[0], nonzero[-1])

    def _weight_zero(self, block: List[WedgeMonomial]) -> List[WedgeMonomial]:
        kept = []
        for monomial in block:
            image = act_on_monomial(H, monomial, self.order)
            if any(target != monomial for target in image):
                raise GradingError(f"h does not act diagonally on {monomial}")
            if not image:
                kept.append(monomial)
        return kept

    def _invariants(self, block: List[WedgeMonomial]) -> Tuple[List[QVector], List[int]]:
        rows: List[List[Fraction]] = []
        for q in (E, F):
            images = [act_on_monomial(q, m, self.order) for m in block]
            targets: Dict[WedgeMonomial, int] = {}
            for image in images:
                for target in image:
                    targets.setdefault(target, len(targets))
            part = [[Fraction(0)] * len(block) for _ in targets]
            for j, image in enumerate(images):
                for target, value in image.items():
                    part[targets[target]][j] = value
            rows.extend(part)
        action = QMatrix.from_rows(rows, len(block))
        return nullspace_basis(action), free_columns(action)

    def _compute_basis(self, k: int) -> GradedBasis:
        monomials = self.monomials(k)
        blocks: Dict[Tuple[int, ...], List[WedgeMonomial]] = {}
        for monomial in monomials:
            if any(g.degree == 2 for g in monomial):
                raise GradingError(f"{monomial} is not horizontal")
            blocks.setdefault(monomial.pattern, []).append(monomial)
        elements: List[Cochain] = []
        anchors: List[WedgeMonomial] = []
        for pattern, block in blocks.items():
            candidates = self._weight_zero(block)
            if not candidates:
                continue
            vectors, free = self._invariants(candidates)
            LOGGER.debug("C^%d w=%d %s pattern %s: %d monomials, %d of h-weight 0, %d invariants",
                         k, self.weight, self.variant.value, pattern, len(block), len(candidates), len(vectors))
            for vector, anchor in zip(vectors, free):
                terms = {candidates[i]: value for i, value in enumerate(vector) if value != 0}
                elements.append(Cochain(terms, k, self.weight, self.variant, self.order))
                anchors.append(candidates[anchor])
        LOGGER.info("C^%d w=%d %s: ambient %d, Sp-basic %d",
                    k, self.weight, self.variant.value, len(monomials), len(elements))
        return GradedBasis(k, self.weight, self.variant, self.order,
                           tuple(elements), tuple(anchors), len(monomials))

    def _compute_differential(self, k: int) -> QMatrix:
        source = self.basis(k)
        target = self.basis(k + 1)
        columns = [coordinates(apply_differential(element), target) for element in source]
        if not columns:
            return QMatrix.zeros(target.dimension, 0)
        return QMatrix.from_columns(columns, target.dimension)


@lru_cache(maxsize=None)
def get_complex(variant: AlgebraVariant, weight: int, order: GeneratorOrder = DEFAULT_ORDER) -> SpBasicComplex:
    """Shared complex per (variant, weight, order)."""
    return SpBasicComplex(AlgebraVariant(variant), weight, order)


def sp_basic_subspace(variant: AlgebraVariant, k: int, w: int,
                      order: GeneratorOrder = DEFAULT_ORDER) -> GradedBasis:
    """Basis of the sl2-invariant horizontal cochains of degree k and weight w."""
    return get_complex(AlgebraVariant(variant), w, order).basis(k)


def differential_matrix(variant: AlgebraVariant, k: int, w: int,
                        order: GeneratorOrder = DEFAULT_ORDER) -> QMatrix:
    """Coboundary C^k -> C^(k+1) in Sp-basic coordinates."""
    return get_complex(AlgebraVariant(variant), w, order).differential_matrix(k)


def complex_for(settings: Optional[ComplexSettings] = None) -> SpBasicComplex:
    """Shared complex described by settings (defaults: ham0, weight 10)."""
    settings = settings or ComplexSettings()
    return get_complex(AlgebraVariant(settings.variant), settings.weight, settings.order)
