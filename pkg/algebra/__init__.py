"""Exact linear algebra, linear Gröbner bases and the Hamiltonian Lie algebra."""

from .linalg import QMatrix, QVector, nullspace_basis, rank, rref
from .groebner import GroebnerBasis, LinearForm, VarOrder, gb_linear, normal_form
from .hamiltonian import AlgebraVariant, Generator, HamElement, HamiltonianAlgebra, HamMonomial

__all__ = ['QMatrix', 'QVector', 'nullspace_basis', 'rank', 'rref',
           'GroebnerBasis', 'LinearForm', 'VarOrder', 'gb_linear', 'normal_form',
           'AlgebraVariant', 'Generator', 'HamElement', 'HamiltonianAlgebra', 'HamMonomial']
