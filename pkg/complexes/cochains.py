"""Exterior-algebra cochains over the dual generators.

A cochain is a sparse map from canonically sorted wedge monomials to
rationals. The Chevalley-Eilenberg differential is the derivation
extending

    (d xi)(u, v) = -xi({u, v})

from generators, and the sl2 action is the derivation extending the
coadjoint action. Both commute with the canonical sort through the
permutation sign.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from algebra.hamiltonian import (QUADRATICS, AlgebraVariant, Generator, HamMonomial,
                                 minimal_degree, poisson_bracket, sl2_coadjoint)
from algebra.linalg import RationalLike, to_rational
from errors import DimensionMismatchError, GradingError


@dataclass(frozen=True)
class GeneratorOrder:
    """Total order on generators; (A, a) ascending unless reversed."""
    reverse: bool = False

    def key(self, g: Generator) -> Tuple[int, int]:
        if self.reverse:
            return (-g.degree, -g.index)
        return (g.degree, g.index)

    def monomial_key(self, monomial: Sequence[Generator]) -> Tuple[Tuple[int, int], ...]:
        return tuple(self.key(g) for g in monomial)

    def is_canonical(self, factors: Sequence[Generator]) -> bool:
        keys = self.monomial_key(factors)
        return all(keys[i] < keys[i + 1] for i in range(len(keys) - 1))


DEFAULT_ORDER = GeneratorOrder()
REVERSED_ORDER = GeneratorOrder(reverse=True)


class WedgeMonomial(tuple):
    """Wedge product of distinct generators, factors in canonical order."""

    def __new__(cls, factors: Iterable[Generator] = ()):
        return super().__new__(cls, tuple(Generator(*f) for f in factors))

    @property
    def degree(self) -> int:
        return len(self)

    @property
    def weight(self) -> int:
        return sum(g.weight for g in self)

    @property
    def pattern(self) -> Tuple[int, ...]:
        """Sorted factor degrees; the sl2 action preserves it."""
        return tuple(sorted(g.degree for g in self))

    @property
    def name(self) -> str:
        return '^'.join(g.name for g in self) if self else '1'

    def __str__(self) -> str:
        return self.name


def canonical(factors: Sequence[Generator], order: GeneratorOrder = DEFAULT_ORDER) -> Tuple[int, WedgeMonomial]:
    """Sort factors into canonical order.

    Returns:
        (sign of the sorting permutation, sorted monomial); sign is 0 when a
        factor repeats.
    """
    keys = [order.key(g) for g in factors]
    if len(set(keys)) != len(keys):
        return 0, WedgeMonomial()
    inversions = 0
    for i in range(len(keys)):
        for j in range(i + 1, len(keys)):
            if keys[i] > keys[j]:
                inversions += 1
    sorted_factors = [g for _, g in sorted(zip(keys, factors))]
    return (-1 if inversions % 2 else 1), WedgeMonomial(sorted_factors)


class Cochain:
    """Homogeneous cochain of fixed degree, weight and variant."""

    __slots__ = ('_terms', 'degree', 'weight', 'variant', 'order')

    def __init__(self, terms: Mapping[WedgeMonomial, RationalLike], degree: int, weight: int,
                 variant: AlgebraVariant, order: GeneratorOrder = DEFAULT_ORDER):
        self.degree = degree
        self.weight = weight
        self.variant = AlgebraVariant(variant)
        self.order = order
        cleaned: Dict[WedgeMonomial, Fraction] = {}
        for monomial, value in terms.items():
            value = to_rational(value)
            if value == 0:
                continue
            monomial = WedgeMonomial(monomial)
            if monomial.degree != degree or monomial.weight != weight:
                raise GradingError(
                    f"{monomial} has degree {monomial.degree} and weight {monomial.weight}, "
                    f"expected degree {degree} and weight {weight}")
            if not order.is_canonical(monomial):
                raise GradingError(f"{monomial} is not in canonical order")
            cleaned[monomial] = value
        self._terms = cleaned

    @classmethod
    def zero(cls, degree: int, weight: int, variant: AlgebraVariant,
             order: GeneratorOrder = DEFAULT_ORDER) -> 'Cochain':
        return cls({}, degree, weight, variant, order)

    @classmethod
    def from_factors(cls, terms: Iterable[Tuple[RationalLike, Sequence[Generator]]], degree: int,
                     weight: int, variant: AlgebraVariant,
                     order: GeneratorOrder = DEFAULT_ORDER) -> 'Cochain':
        """Build from (coefficient, factor list) pairs in any factor order."""
        accumulated: Dict[WedgeMonomial, Fraction] = {}
        for value, factors in terms:
            sign, monomial = canonical(factors, order)
            if sign == 0:
                continue
            accumulated[monomial] = accumulated.get(monomial, Fraction(0)) + sign * to_rational(value)
        return cls(accumulated, degree, weight, variant, order)

    @property
    def terms(self) -> Dict[WedgeMonomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self) -> List[WedgeMonomial]:
        return list(self._terms)

    def coefficient(self, monomial: WedgeMonomial) -> Fraction:
        return self._terms.get(monomial, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def _check_compatible(self, other: 'Cochain') -> None:
        if (self.degree, self.weight, self.variant, self.order) != \
                (other.degree, other.weight, other.variant, other.order):
            raise DimensionMismatchError("cochains of different degree, weight, variant or order")

    def __add__(self, other: 'Cochain') -> 'Cochain':
        self._check_compatible(other)
        merged = dict(self._terms)
        for monomial, value in other._terms.items():
            merged[monomial] = merged.get(monomial, Fraction(0)) + value
        return Cochain(merged, self.degree, self.weight, self.variant, self.order)

    def __sub__(self, other: 'Cochain') -> 'Cochain':
        return self + other.scale(-1)

    def scale(self, factor: RationalLike) -> 'Cochain':
        factor = to_rational(factor)
        return Cochain({m: factor * v for m, v in self._terms.items()},
                       self.degree, self.weight, self.variant, self.order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return ((self.degree, self.weight, self.variant, self.order, self._terms) ==
                (other.degree, other.weight, other.variant, other.order, other._terms))

    def __repr__(self) -> str:
        shown = ' + '.join(f"{v}*{m}" for m, v in list(self._terms.items())[:4])
        more = ' + ...' if len(self._terms) > 4 else ''
        return (f"Cochain(k={self.degree}, w={self.weight}, {self.variant.value}: "
                f"{shown or '0'}{more})")


def _accumulate(target: Dict[WedgeMonomial, Fraction], factors: Sequence[Generator],
                value: Fraction, order: GeneratorOrder) -> None:
    sign, monomial = canonical(factors, order)
    if sign == 0:
        return
    total = target.get(monomial, Fraction(0)) + sign * value
    if total == 0:
        target.pop(monomial, None)
    else:
        target[monomial] = total


@lru_cache(maxsize=None)
def generator_differential(g: Generator, variant: AlgebraVariant,
                           order: GeneratorOrder = DEFAULT_ORDER) -> Tuple[Tuple[WedgeMonomial, Fraction], ...]:
    """d of a single generator as (w_P ^ w_Q, coefficient) pairs, P before Q.

    Pairs range over every monomial of the algebra, the sl2 layer included,
    with deg P + deg Q = A + 2.
    """
    low = minimal_degree(variant)
    target = g.monomial
    terms: Dict[WedgeMonomial, Fraction] = {}
    for d1 in range(low, g.degree + 3 - low):
        d2 = g.degree + 2 - d1
        for a1 in range(d1 + 1):
            a2 = g.index + 1 - a1
            if not 0 <= a2 <= d2:
                continue
            p, q = Generator(d1, a1), Generator(d2, a2)
            if order.key(p) >= order.key(q):
                continue
            value = poisson_bracket(p.monomial, q.monomial).coefficient(target)
            if value != 0:
                terms[WedgeMonomial((p, q))] = -value
    return tuple(terms.items())


def differential_of_monomial(monomial: WedgeMonomial, variant: AlgebraVariant,
                             order: GeneratorOrder = DEFAULT_ORDER) -> Dict[WedgeMonomial, Fraction]:
    result: Dict[WedgeMonomial, Fraction] = {}
    for i, g in enumerate(monomial):
        position_sign = -1 if i % 2 else 1
        for pair, value in generator_differential(g, AlgebraVariant(variant), order):
            factors = monomial[:i] + tuple(pair) + monomial[i + 1:]
            _accumulate(result, factors, position_sign * value, order)
    return result


def apply_differential(c: Cochain) -> Cochain:
    """Chevalley-Eilenberg coboundary; degree rises by one, weight is kept."""
    result: Dict[WedgeMonomial, Fraction] = {}
    for monomial, coefficient in c.items():
        for image, value in differential_of_monomial(monomial, c.variant, c.order).items():
            total = result.get(image, Fraction(0)) + coefficient * value
            if total == 0:
                result.pop(image, None)
            else:
                result[image] = total
    return Cochain(result, c.degree + 1, c.weight, c.variant, c.order)


def act_on_monomial(q: HamMonomial, monomial: WedgeMonomial,
                    order: GeneratorOrder = DEFAULT_ORDER) -> Dict[WedgeMonomial, Fraction]:
    """Derivation extension of the coadjoint action of a quadratic Hamiltonian."""
    result: Dict[WedgeMonomial, Fraction] = {}
    for i, g in enumerate(monomial):
        for target, value in sl2_coadjoint(q, g).items():
            factors = monomial[:i] + (target,) + monomial[i + 1:]
            _accumulate(result, factors, value, order)
    return result


def sl2_act(q: HamMonomial, c: Cochain) -> Cochain:
    result: Dict[WedgeMonomial, Fraction] = {}
    for monomial, coefficient in c.items():
        for image, value in act_on_monomial(q, monomial, c.order).items():
            total = result.get(image, Fraction(0)) + coefficient * value
            if total == 0:
                result.pop(image, None)
            else:
                result[image] = total
    return Cochain(result, c.degree, c.weight, c.variant, c.order)


def is_sp_basic(c: Cochain) -> bool:
    """No sl2-layer factor and killed by e, h and f."""
    if any(g.degree == 2 for monomial in c.monomials() for g in monomial):
        return False
    return all(sl2_act(q, c).is_zero() for q in QUADRATICS.values())


OMEGA_FACTORS = (Generator(1, 0), Generator(1, 1))


def wedge_omega(c: Cochain) -> Cochain:
    """w0_1 ^ w1_1 ^ c, taking a ham0 cochain of (k, w) to a ham cochain of (k + 2, w - 2)."""
    if c.variant is not AlgebraVariant.HAM0:
        raise GradingError(f"omega wedge expects a ham0 cochain, got {c.variant.value}")
    result: Dict[WedgeMonomial, Fraction] = {}
    for monomial, coefficient in c.items():
        _accumulate(result, OMEGA_FACTORS + tuple(monomial), coefficient, c.order)
    wedged = Cochain(result, c.degree + 2, c.weight - 2, AlgebraVariant.HAM, c.order)
    # omega is sl2-invariant, so the wedge keeps Sp-basic cochains Sp-basic
    if is_sp_basic(c) and not is_sp_basic(wedged):
        raise GradingError(f"omega wedge left the Sp-basic subspace in degree {wedged.degree}")
    return wedged
