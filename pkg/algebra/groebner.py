"""Gröbner bases of ideals generated by linear forms.

Under a lex order on the variables the reduced Gröbner basis of a linear
ideal is the set of nonzero rows of the reduced row echelon form of the
coefficient matrix, so the engine is ordered Gaussian elimination:
- gb_linear: basis of the ideal spanned by a list of forms
- normal_form / is_member: remainder modulo a basis
- kernel_via_normal_form: kernel of a matrix read off a parametric normal form
- quotient_gb: basis of kernel modulo image

Generators are stored integer-primitive with positive leading coefficient,
sorted with the greatest leading variable first.
"""

import re
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from algebra.linalg import (QMatrix, QVector, RationalLike, format_rational,
                            primitive_entries, rref, to_rational)
from errors import ContainmentError, DimensionMismatchError, ParseError


class VarOrder:
    """Ordered variable names; earlier names are greater."""

    __slots__ = ('names', '_index')

    def __init__(self, names: Sequence[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"variable names must be distinct: {names}")
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}

    @classmethod
    def numbered(cls, prefix: str, count: int) -> 'VarOrder':
        """prefix1 > prefix2 > ... > prefix<count>."""
        return cls([f"{prefix}{i}" for i in range(1, count + 1)])

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def __len__(self) -> int:
        return len(self.names)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VarOrder):
            return NotImplemented
        return self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def header(self) -> str:
        """`vars y1..yK` for numbered orders, an explicit list otherwise."""
        if not self.names:
            return 'vars'
        match = re.match(r'^([A-Za-z]+)1$', self.names[0])
        if match and self == VarOrder.numbered(match.group(1), len(self.names)):
            return f"vars {self.names[0]}..{self.names[-1]}"
        return 'vars ' + ' '.join(self.names)

    def __repr__(self) -> str:
        return f"VarOrder({self.header()[5:]})"


class LinearForm:
    """Linear polynomial over a VarOrder with no stored zero coefficients."""

    __slots__ = ('order', '_coeffs')

    def __init__(self, order: VarOrder, coeffs: Optional[Mapping[int, RationalLike]] = None):
        self.order = order
        cleaned: Dict[int, Fraction] = {}
        for index, value in (coeffs or {}).items():
            if not 0 <= index < len(order):
                raise DimensionMismatchError(f"variable index {index} outside order of size {len(order)}")
            value = to_rational(value)
            if value != 0:
                cleaned[index] = value
        self._coeffs = cleaned

    @classmethod
    def from_vector(cls, order: VarOrder, vector: Iterable[RationalLike]) -> 'LinearForm':
        values = list(vector)
        if len(values) != len(order):
            raise DimensionMismatchError(f"vector of length {len(values)} for {len(order)} variables")
        return cls(order, dict(enumerate(values)))

    @classmethod
    def variable(cls, order: VarOrder, index: int) -> 'LinearForm':
        return cls(order, {index: 1})

    @property
    def coeffs(self) -> Dict[int, Fraction]:
        return dict(self._coeffs)

    def coefficient(self, index: int) -> Fraction:
        return self._coeffs.get(index, Fraction(0))

    def to_vector(self) -> QVector:
        return QVector(self.coefficient(i) for i in range(len(self.order)))

    def is_zero(self) -> bool:
        return not self._coeffs

    def lead(self) -> int:
        """Index of the greatest variable present."""
        if not self._coeffs:
            raise ValueError("zero form has no leading variable")
        return min(self._coeffs)

    def lead_coefficient(self) -> Fraction:
        return self._coeffs[self.lead()]

    def _check_order(self, other: 'LinearForm') -> None:
        if self.order != other.order:
            raise DimensionMismatchError("linear forms over different variable orders")

    def __add__(self, other: 'LinearForm') -> 'LinearForm':
        self._check_order(other)
        merged = dict(self._coeffs)
        for index, value in other._coeffs.items():
            merged[index] = merged.get(index, Fraction(0)) + value
        return LinearForm(self.order, merged)

    def __sub__(self, other: 'LinearForm') -> 'LinearForm':
        return self + other.scale(-1)

    def __neg__(self) -> 'LinearForm':
        return self.scale(-1)

    def scale(self, factor: RationalLike) -> 'LinearForm':
        factor = to_rational(factor)
        return LinearForm(self.order, {i: factor * v for i, v in self._coeffs.items()})

    def primitive(self) -> 'LinearForm':
        if self.is_zero():
            return self
        return LinearForm.from_vector(self.order, primitive_entries(self.to_vector().entries))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearForm):
            return NotImplemented
        return self.order == other.order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.order, tuple(sorted(self._coeffs.items()))))

    def __str__(self) -> str:
        return format_form(self)

    def __repr__(self) -> str:
        return f"LinearForm({format_form(self)})"


class GroebnerBasis:
    """Reduced lex Gröbner basis of a linear ideal."""

    __slots__ = ('order', 'generators')

    def __init__(self, order: VarOrder, generators: Sequence[LinearForm]):
        self.order = order
        self.generators = tuple(generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __getitem__(self, index: int) -> LinearForm:
        return self.generators[index]

    def leading_indices(self) -> List[int]:
        return [g.lead() for g in self.generators]

    def is_reduced(self) -> bool:
        leads = self.leading_indices()
        if len(set(leads)) != len(leads) or leads != sorted(leads):
            return False
        for g in self.generators:
            if g.lead_coefficient() <= 0 or g.primitive() != g:
                return False
            if any(g.coefficient(lead) != 0 for lead in leads if lead != g.lead()):
                return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.order == other.order and self.generators == other.generators

    def __repr__(self) -> str:
        return f"GroebnerBasis({[format_form(g) for g in self.generators]})"


def _check_orders(forms: Iterable[LinearForm], order: VarOrder) -> None:
    for form in forms:
        if form.order != order:
            raise DimensionMismatchError(f"form {form} is not over {order}")


def gb_linear(forms: Sequence[LinearForm], order: VarOrder) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by linear forms."""
    _check_orders(forms, order)
    rows = [f.to_vector() for f in forms if not f.is_zero()]
    if not rows:
        return GroebnerBasis(order, ())
    reduced, _, r = rref(QMatrix.from_rows([list(v) for v in rows], len(order)))
    return GroebnerBasis(order, [LinearForm.from_vector(order, reduced.row(i)).primitive() for i in range(r)])


def normal_form(f: LinearForm, gb: GroebnerBasis) -> LinearForm:
    """Remainder of f free of every leading variable of gb."""
    if f.order != gb.order:
        raise DimensionMismatchError("form and basis use different variable orders")
    remainder = f
    for g in gb:
        c = remainder.coefficient(g.lead())
        if c != 0:
            remainder = remainder - g.scale(c / g.lead_coefficient())
    return remainder


def is_member(f: LinearForm, gb: GroebnerBasis) -> bool:
    """Ideal membership: f reduces to zero modulo gb."""
    return normal_form(f, gb).is_zero()


def forms_from_rows(m: QMatrix, order: VarOrder) -> List[LinearForm]:
    """Row i of m as the form sum_j m[i, j] * order_j."""
    if m.cols != len(order):
        raise DimensionMismatchError(f"{m.cols} columns for {len(order)} variables")
    return [LinearForm.from_vector(order, m.row(i)) for i in range(m.rows)]


def forms_from_columns(m: QMatrix, order: VarOrder) -> List[LinearForm]:
    """Column j of m as the form sum_i m[i, j] * order_i."""
    if m.rows != len(order):
        raise DimensionMismatchError(f"{m.rows} rows for {len(order)} variables")
    return [LinearForm.from_vector(order, m.column(j)) for j in range(m.cols)]


def kernel_via_normal_form(n: QMatrix, c_order: VarOrder, y_order: VarOrder) -> List[LinearForm]:
    """Kernel of the forward map n read off the normal form of h = sum c_j y_j.

    The forms f_i(c) = (c . tN)_i generate an ideal in the c variables;
    reducing h modulo its Gröbner basis leaves sum over free j of
    c_j * ftilde_j(y). Returns ftilde_1..ftilde_n with the zero form at
    every pivot index, so the list length is n.cols.
    """
    if not (n.cols == len(c_order) == len(y_order)):
        raise DimensionMismatchError(
            f"{n.cols} columns with {len(c_order)} c-variables and {len(y_order)} y-variables")
    gb = gb_linear(forms_from_rows(n, c_order), c_order)
    # coefficient of c_j in h, itself a linear form in y
    parametric = [LinearForm.variable(y_order, j) for j in range(n.cols)]
    for g in gb:
        lead = g.lead()
        pivot_form = parametric[lead]
        lc = g.lead_coefficient()
        for j, value in g.coeffs.items():
            if j != lead:
                parametric[j] = parametric[j] - pivot_form.scale(value / lc)
        parametric[lead] = LinearForm(y_order)
    return parametric


def quotient_gb(gb_k: GroebnerBasis, gb_e: GroebnerBasis) -> GroebnerBasis:
    """Basis of the ideal of normal forms of gb_k modulo gb_e."""
    if gb_k.order != gb_e.order:
        raise DimensionMismatchError("kernel and image bases use different variable orders")
    for g in gb_e:
        if not is_member(g, gb_k):
            raise ContainmentError(f"image generator {g} is not in the kernel ideal")
    return gb_linear([normal_form(g, gb_e) for g in gb_k], gb_k.order)


def proportional(a: LinearForm, b: LinearForm) -> bool:
    """True when b = t * a for a nonzero rational t (both zero counts)."""
    if a.order != b.order:
        raise DimensionMismatchError("forms over different variable orders")
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    if set(a.coeffs) != set(b.coeffs):
        return False
    factor = b.lead_coefficient() / a.lead_coefficient()
    return a.scale(factor) == b


def equal_up_to_scalar(a: Union[GroebnerBasis, Sequence[LinearForm]],
                       b: Sequence[LinearForm]) -> bool:
    """Same generator count and each pair, matched by leading variable, proportional."""
    left = list(a)
    right = [form for form in b if not form.is_zero()]
    if len(left) != len(right):
        return False
    by_lead: Dict[int, LinearForm] = {}
    for form in right:
        if form.lead() in by_lead:
            return False
        by_lead[form.lead()] = form
    for form in left:
        partner = by_lead.get(form.lead())
        if partner is None or not proportional(form, partner):
            return False
    return True


def pairwise_up_to_scalar(a: Sequence[LinearForm], b: Sequence[LinearForm]) -> bool:
    """Positional comparison; zero forms must line up with zero forms."""
    return len(a) == len(b) and all(proportional(x, y) for x, y in zip(a, b))


# --- text format --------------------------------------------------------------

_BRACED_INDEX = re.compile(r'([A-Za-z]+)_\{+(\d+)\}+')
_PLAIN_INDEX = re.compile(r'([A-Za-z]+)_(\d+)')
_TERM = re.compile(r'([+-]?)(\d+(?:/\d+)?)?\*?([A-Za-z]+\d+)')
_HEADER_RANGE = re.compile(r'^vars\s+([A-Za-z]+)1\.\.([A-Za-z]+)(\d+)$')
# `G1 = ...` assignments in printer source
_LABEL = re.compile(r'^\s*[A-Za-z]\w*\s*=')


def format_form(form: LinearForm) -> str:
    """`21*y7-9*y8`, descending variable order, unit coefficients omitted."""
    if form.is_zero():
        return '0'
    parts = []
    for index in sorted(form.coeffs):
        value = form.coefficient(index)
        name = form.order.names[index]
        sign = '-' if value < 0 else '+'
        magnitude = abs(value)
        term = name if magnitude == 1 else f"{format_rational(magnitude)}*{name}"
        parts.append((sign, term))
    first_sign, first_term = parts[0]
    text = ('-' if first_sign == '-' else '') + first_term
    for sign, term in parts[1:]:
        text += sign + term
    return text


def parse_form(text: str, order: VarOrder, path: Optional[Union[str, Path]] = None,
               line: Optional[int] = None) -> LinearForm:
    """Parse one form in either `3 y_{8}-2/3 y_{9}` or `3*y8-2/3*y9` style."""
    normalized = _BRACED_INDEX.sub(r'\1\2', text)
    normalized = _PLAIN_INDEX.sub(r'\1\2', normalized)
    normalized = re.sub(r'\s+', '', normalized)
    if normalized in ('0', '+0', '-0'):
        return LinearForm(order)
    if not normalized:
        raise ParseError("empty form", path, line)
    coeffs: Dict[int, Fraction] = {}
    position = 0
    for match in _TERM.finditer(normalized):
        if match.start() != position or (position > 0 and not match.group(1)):
            raise ParseError(f"cannot parse {text.strip()!r} near {normalized[position:]!r}", path, line)
        sign = -1 if match.group(1) == '-' else 1
        magnitude = to_rational(match.group(2)) if match.group(2) else Fraction(1)
        try:
            index = order.index(match.group(3))
        except KeyError as exc:
            raise ParseError(str(exc.args[0]), path, line) from None
        coeffs[index] = coeffs.get(index, Fraction(0)) + sign * magnitude
        position = match.end()
    if position != len(normalized):
        raise ParseError(f"cannot parse {text.strip()!r} near {normalized[position:]!r}", path, line)
    return LinearForm(order, coeffs)


def parse_header(text: str, path: Optional[Union[str, Path]] = None,
                 line: Optional[int] = None) -> VarOrder:
    """`vars y1..y12` or an explicit `vars a b c` list, greatest variable first."""
    header = text.strip()
    match = _HEADER_RANGE.match(header)
    if match:
        if match.group(1) != match.group(2):
            raise ParseError(f"inconsistent variable range {header!r}", path, line)
        return VarOrder.numbered(match.group(1), int(match.group(3)))
    parts = header.split()
    if not parts or parts[0] != 'vars':
        raise ParseError(f"expected a 'vars' header, got {header!r}", path, line)
    return VarOrder(parts[1:])


def parse_listing(text: str, path: Optional[Union[str, Path]] = None) -> Tuple[VarOrder, List[LinearForm]]:
    """Parse a `vars` header and the forms after it.

    Forms are one per line; bracketed, comma-separated printer output
    (several forms on a line, trailing commas) is accepted as well.
    """
    order: Optional[VarOrder] = None
    forms: List[LinearForm] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith('#'):
            continue
        if order is None:
            order = parse_header(stripped, path, number)
            continue
        body = stripped.replace('[', '').replace(']', '').rstrip('$;')
        for piece in body.split(','):
            piece = _LABEL.sub('', piece)
            if piece.strip():
                forms.append(parse_form(piece, order, path, number))
    if order is None:
        raise ParseError("missing 'vars' header", path)
    return order, forms


def format_listing(order: VarOrder, forms: Iterable[LinearForm]) -> str:
    """Render a listing.

    Args:
        order: Variable order, written as the `vars` header
        forms: Forms, one per line

    Returns:
        Listing text with a trailing newline
    """
    lines = [order.header()] + [format_form(f) for f in forms]
    return '\n'.join(lines) + '\n'


def format_gb(gb: GroebnerBasis) -> str:
    """Listing of the generators of gb under its own order."""
    return format_listing(gb.order, gb.generators)


def load_listing(path: Union[str, Path]) -> Tuple[VarOrder, List[LinearForm]]:
    """Read a listing file written by either printer.

    Args:
        path: Listing file with a `vars` header

    Returns:
        (variable order, forms in file order)
    """
    path = Path(path)
    return parse_listing(path.read_text(encoding='utf-8'), path)
