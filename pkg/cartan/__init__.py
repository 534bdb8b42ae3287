"""
Данные Картана, веса, носители и структурные условия
"""
from .datum import CartanDatum, d4, triangle, type_a
from .weight import Coords, Weight, pairing_of, solve_root_coords
from .support import Support
from .conditions import ConditionReport, check_conditions
from .grassmannian import GrassmannianSupport, balanced_tuple, grassmannian_support, tuple_pairings

__all__ = [
    'CartanDatum',
    'd4',
    'triangle',
    'type_a',
    'Coords',
    'Weight',
    'pairing_of',
    'solve_root_coords',
    'Support',
    'ConditionReport',
    'check_conditions',
    'GrassmannianSupport',
    'balanced_tuple',
    'grassmannian_support',
    'tuple_pairings',
]
