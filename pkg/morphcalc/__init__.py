"""
Слова в E/F, их сортировка и размерности Hom-пространств
"""
from .words import E, Ed2, F, Letter, LetterKind, MorphWord, parse_word, weight_after
from .graded_class import GradedClass
from .sorting import DropRule, Orientation, decompose, sort_class
from .serre import serre_rewrite, verify_serre
from .engine import HomEngine, hom_dim
from .divided import deconvolve, hom_dim_divided
from .nonzero import is_nonzero
from .appendix import AppendixReport, appendix_check

__all__ = [
    'E',
    'Ed2',
    'F',
    'Letter',
    'LetterKind',
    'MorphWord',
    'parse_word',
    'weight_after',
    'GradedClass',
    'DropRule',
    'Orientation',
    'decompose',
    'sort_class',
    'serre_rewrite',
    'verify_serre',
    'HomEngine',
    'hom_dim',
    'deconvolve',
    'hom_dim_divided',
    'is_nonzero',
    'AppendixReport',
    'appendix_check',
]
