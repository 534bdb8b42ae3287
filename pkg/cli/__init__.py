"""
Командная строка: все операции с детерминированным JSON-выводом
"""
from .main import build_parser, run

__all__ = ['build_parser', 'run']
