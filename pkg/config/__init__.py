"""
Модуль конфигурации приложения
"""
from .settings import (
    EngineSettings,
    LoggingSettings,
    RewriteSettings,
    SearchSettings,
    Settings,
    get_settings,
    reset_settings,
)

__all__ = [
    'EngineSettings',
    'LoggingSettings',
    'RewriteSettings',
    'SearchSettings',
    'Settings',
    'get_settings',
    'reset_settings',
]
