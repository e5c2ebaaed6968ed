"""Formal Hamiltonian polynomials on the plane.

Implements:
- Poisson bracket {x, y} = 1 in the divided-power basis x^a/a! * y^b/b!
- The dual generators w{a}_{A} with weight A - 2
- The coadjoint action of the quadratic Hamiltonians (a copy of sl2)

Constants are dropped: the algebra is polynomials modulo constants.
"""

import math
import re
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, NamedTuple, Tuple

from algebra.linalg import QMatrix, RationalLike, mat_mul, to_rational


class AlgebraVariant(str, Enum):
    """ham: all polynomials mod constants; ham0: those vanishing to order 2 at the origin."""
    HAM = 'ham'
    HAM0 = 'ham0'


class HamMonomial(NamedTuple):
    """x^a/a! * y^b/b!"""
    a: int
    b: int

    @property
    def degree(self) -> int:
        return self.a + self.b

    def __str__(self) -> str:
        return f"m({self.a},{self.b})"


class Generator(NamedTuple):
    """Dual basis element w{index}_{degree} of m(index, degree - index).

    Field order makes tuple comparison the (A, a) generator order.
    """
    degree: int
    index: int

    @property
    def weight(self) -> int:
        return self.degree - 2

    @property
    def sl2_weight(self) -> int:
        return 2 * self.index - self.degree

    @property
    def monomial(self) -> HamMonomial:
        return HamMonomial(self.index, self.degree - self.index)

    @property
    def name(self) -> str:
        return f"w{self.index}_{self.degree}"

    def __str__(self) -> str:
        return self.name


_GENERATOR_NAME = re.compile(r'^w(\d+)_\{?(\d+)\}?$')


def parse_generator(name: str) -> Generator:
    match = _GENERATOR_NAME.match(name.strip())
    if not match:
        raise ValueError(f"not a generator name: {name!r}")
    index, degree = int(match.group(1)), int(match.group(2))
    if degree < 1 or not 0 <= index <= degree:
        raise ValueError(f"generator {name!r} out of range")
    return Generator(degree, index)


class HamElement:
    """Finite combination of HamMonomials."""

    __slots__ = ('_terms',)

    def __init__(self, terms: Mapping[HamMonomial, RationalLike] = None):
        cleaned = {}
        for monomial, value in (terms or {}).items():
            value = to_rational(value)
            if value != 0:
                cleaned[HamMonomial(*monomial)] = value
        self._terms = cleaned

    @property
    def terms(self) -> Dict[HamMonomial, Fraction]:
        return dict(self._terms)

    def coefficient(self, monomial: HamMonomial) -> Fraction:
        return self._terms.get(monomial, Fraction(0))

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: 'HamElement') -> 'HamElement':
        merged = dict(self._terms)
        for monomial, value in other._terms.items():
            merged[monomial] = merged.get(monomial, Fraction(0)) + value
        return HamElement(merged)

    def __neg__(self) -> 'HamElement':
        return self.scale(-1)

    def scale(self, factor: RationalLike) -> 'HamElement':
        factor = to_rational(factor)
        return HamElement({m: factor * v for m, v in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HamElement):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self) -> str:
        body = ' + '.join(f"{v}*{m}" for m, v in sorted(self._terms.items()))
        return f"HamElement({body or '0'})"


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=None)
def _bracket_monomials(p: HamMonomial, q: HamMonomial) -> Tuple[Tuple[HamMonomial, Fraction], ...]:
    a, b = p
    c, d = q
    x_exp, y_exp = a + c - 1, b + d - 1
    if x_exp < 0 or y_exp < 0 or x_exp + y_exp < 1:
        return ()
    coefficient = (binomial(x_exp, a - 1) * binomial(y_exp, d - 1)
                   - binomial(x_exp, c - 1) * binomial(y_exp, b - 1))
    if coefficient == 0:
        return ()
    return ((HamMonomial(x_exp, y_exp), Fraction(coefficient)),)


def poisson_bracket(p: HamMonomial, q: HamMonomial) -> HamElement:
    """{p, q} = p_x q_y - p_y q_x on divided-power monomials."""
    for monomial in (p, q):
        if monomial.a < 0 or monomial.b < 0 or monomial.degree < 1:
            raise ValueError(f"invalid Hamiltonian monomial {monomial}")
    return HamElement(dict(_bracket_monomials(HamMonomial(*p), HamMonomial(*q))))


def bracket(f: HamElement, g: HamElement) -> HamElement:
    """Bilinear extension of poisson_bracket."""
    result = HamElement()
    for p, u in f.items():
        for q, v in g.items():
            result = result + poisson_bracket(p, q).scale(u * v)
    return result


def minimal_degree(variant: AlgebraVariant) -> int:
    """Lowest polynomial degree present in the algebra."""
    return 1 if AlgebraVariant(variant) is AlgebraVariant.HAM else 2


def generators_of(variant: AlgebraVariant, max_weight: int) -> List[Generator]:
    """Horizontal generators of weight <= max_weight in (A, a) order.

    The degree-2 layer is the sl2 subalgebra and is never a generator of an
    Sp-basic cochain.
    """
    variant = AlgebraVariant(variant)
    lowest = 1 if variant is AlgebraVariant.HAM else 3
    generators = []
    for degree in range(lowest, max_weight + 3):
        if degree == 2:
            continue
        generators.extend(Generator(degree, a) for a in range(degree + 1))
    return generators


# quadratic Hamiltonians spanning sl2
E = HamMonomial(2, 0)
H = HamMonomial(1, 1)
F = HamMonomial(0, 2)
QUADRATICS: Dict[str, HamMonomial] = {'e': E, 'h': H, 'f': F}


@lru_cache(maxsize=None)
def _coadjoint(q: HamMonomial, g: Generator) -> Tuple[Tuple[Generator, Fraction], ...]:
    target = g.monomial
    terms = []
    for c in range(g.degree + 1):
        u = HamMonomial(c, g.degree - c)
        value = poisson_bracket(q, u).coefficient(target)
        if value != 0:
            terms.append((Generator(g.degree, c), -value))
    return tuple(terms)


def sl2_coadjoint(q: HamMonomial, g: Generator) -> Dict[Generator, Fraction]:
    """(q . xi)(u) = -xi({q, u}) for xi = g and q one of e, h, f."""
    q = HamMonomial(*q)
    if q not in QUADRATICS.values():
        raise ValueError(f"{q} is not a quadratic divided-power monomial")
    return dict(_coadjoint(q, Generator(*g)))


class HamiltonianAlgebra:
    """The Lie algebra of one variant together with its sl2 action."""

    def __init__(self, variant: AlgebraVariant):
        self.variant = AlgebraVariant(variant)
        self.min_degree = minimal_degree(self.variant)

    def generators(self, max_weight: int) -> List[Generator]:
        return generators_of(self.variant, max_weight)

    def monomials_of_degree(self, degree: int) -> List[HamMonomial]:
        if degree < self.min_degree:
            return []
        return [HamMonomial(a, degree - a) for a in range(degree + 1)]

    def dual_span(self, degree: int) -> List[Generator]:
        return [Generator(degree, a) for a in range(degree + 1)]

    def action_matrix(self, q: HamMonomial, degree: int) -> QMatrix:
        """Matrix of the coadjoint action of q on span{w0_A, ..., wA_A}; column j is q . w{j}_A."""
        size = degree + 1
        entries = [[Fraction(0)] * size for _ in range(size)]
        for j, g in enumerate(self.dual_span(degree)):
            for target, value in sl2_coadjoint(q, g).items():
                entries[target.index][j] += value
        return QMatrix.from_rows(entries, size)

    def casimir_matrix(self, degree: int) -> QMatrix:
        """-(rho_e rho_f + rho_f rho_e) + rho_h^2 / 2 on the degree-A dual span."""
        rho_e = self.action_matrix(E, degree)
        rho_f = self.action_matrix(F, degree)
        rho_h = self.action_matrix(H, degree)
        ef = mat_mul(rho_e, rho_f)
        fe = mat_mul(rho_f, rho_e)
        hh = mat_mul(rho_h, rho_h)
        size = degree + 1
        return QMatrix(size, size, [-(x + y) + z / 2 for x, y, z in zip(ef.entries, fe.entries, hh.entries)])


def monomials_up_to(variant: AlgebraVariant, max_degree: int) -> Iterable[HamMonomial]:
    low = minimal_degree(variant)
    for degree in range(low, max_degree + 1):
        for a in range(degree + 1):
            yield HamMonomial(a, degree - a)
