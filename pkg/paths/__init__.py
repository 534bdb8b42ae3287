"""
Пути по допустимым сдвигам и последовательности перемасштабирований
"""
from .slides import (
    SlideSeq,
    Step,
    canonical_path,
    endpoint,
    is_middle_weight,
    is_valid_path,
    is_valid_slide,
    middle_weights,
    parse_steps,
    slide_graph,
)
from .moves import Drop, Insert, Mode, MoveCert, Switch, drop_move, insert_move, replay, switch_move
from .search import DEFAULT_SEARCH_BUDGET, DEFAULT_SLACK, Undecided, reduce_appended, reduce_to_empty, slide_equivalent

__all__ = [
    'SlideSeq',
    'Step',
    'canonical_path',
    'endpoint',
    'is_middle_weight',
    'is_valid_path',
    'is_valid_slide',
    'middle_weights',
    'parse_steps',
    'slide_graph',
    'Drop',
    'Insert',
    'Mode',
    'MoveCert',
    'Switch',
    'drop_move',
    'insert_move',
    'replay',
    'switch_move',
    'DEFAULT_SEARCH_BUDGET',
    'DEFAULT_SLACK',
    'Undecided',
    'reduce_appended',
    'reduce_to_empty',
    'slide_equivalent',
]
