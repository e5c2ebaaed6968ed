"""Cochains and Sp-basic complexes."""

from .cochains import Cochain, GeneratorOrder, WedgeMonomial, apply_differential, wedge_omega
from .sp_basic import ComplexSettings, GradedBasis, SpBasicComplex

__all__ = ['Cochain', 'GeneratorOrder', 'WedgeMonomial', 'apply_differential', 'wedge_omega',
           'ComplexSettings', 'GradedBasis', 'SpBasicComplex']
