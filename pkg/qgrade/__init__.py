"""
Квантовые целые и градуированные кратности
"""
from .laurent import GradedMult, LaurentInt
from .quantum import qbinom, qfactorial, qint
from .dimtable import (
    UNKNOWN,
    ZERO,
    DimTable,
    DimValue,
    Exactly,
    Unknown,
    dim_add,
    value_add,
    value_scale,
)

__all__ = [
    'GradedMult',
    'LaurentInt',
    'qbinom',
    'qfactorial',
    'qint',
    'UNKNOWN',
    'ZERO',
    'DimTable',
    'DimValue',
    'Exactly',
    'Unknown',
    'dim_add',
    'value_add',
    'value_scale',
]
