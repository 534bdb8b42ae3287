"""
Общие компоненты: иерархия ошибок
"""
from .errors import (
    AlgebraError,
    ClaimFailure,
    EmptySupport,
    EndpointMismatch,
    IncomparableWeights,
    InvalidDatum,
    InvalidMove,
    NegativeDimension,
    NegativeMultiplicity,
    NonDivisible,
    NonFiniteSupport,
    NonTermination,
    NotAdjacent,
    NotClosed,
    NotFound,
    OracleUnverified,
    ParseError,
    PreconditionError,
    WindowTooNarrow,
)

__all__ = [
    'AlgebraError',
    'ClaimFailure',
    'EmptySupport',
    'EndpointMismatch',
    'IncomparableWeights',
    'InvalidDatum',
    'InvalidMove',
    'NegativeDimension',
    'NegativeMultiplicity',
    'NonDivisible',
    'NonFiniteSupport',
    'NonTermination',
    'NotAdjacent',
    'NotClosed',
    'NotFound',
    'OracleUnverified',
    'ParseError',
    'PreconditionError',
    'WindowTooNarrow',
]
