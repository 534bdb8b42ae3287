"""
Файлы данных Картана и носителей
"""
from .datum_files import load_datum, load_support, save_datum, save_support

__all__ = [
    'load_datum',
    'load_support',
    'save_datum',
    'save_support',
]
