"""
Алгебра R_Q: слова, нормальная форма, соотношения и оракул nilHecke
"""
from .words import CROSS, DOT, Gen, KlrWord, Labels, cross, dot, parse_klr_word
from .element import KlrElement, format_element, parse_element
from .normal_form import DEFAULT_STEP_BUDGET, KlrRewriter, is_normal, normalize
from .relations import RelationReport, relation_check, relation_instances, triple_crossing
from .counting import graded_dim_count
from .oracle import PolynomialOracle, nil_hecke_oracle

__all__ = [
    'CROSS',
    'DOT',
    'Gen',
    'KlrWord',
    'Labels',
    'cross',
    'dot',
    'parse_klr_word',
    'KlrElement',
    'format_element',
    'parse_element',
    'DEFAULT_STEP_BUDGET',
    'KlrRewriter',
    'is_normal',
    'normalize',
    'RelationReport',
    'relation_check',
    'relation_instances',
    'triple_crossing',
    'graded_dim_count',
    'PolynomialOracle',
    'nil_hecke_oracle',
]
