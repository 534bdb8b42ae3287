# -*- coding: utf-8 -*-
"""
Модуль конфигурации приложения
Централизованное управление бюджетами вычислений и логированием
"""
import os
import logging
from dataclasses import dataclass
from typing import Optional
from pathlib import Path
from dotenv import load_dotenv

# Загружаем .env файл (явно указываем путь)
env_path = Path(__file__).parent.parent / ".env"
if env_path.exists():
    load_dotenv(dotenv_path=env_path, override=True)
else:
    # Пробуем загрузить из текущей директории
    load_dotenv(override=True)


def _env_int(name: str, default: int) -> int:
    """Целое из переменной окружения или значение по умолчанию"""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw.strip().replace("_", ""))
    except ValueError:
        raise ValueError(
            f"❌ {name} должен быть целым числом, получено: {raw}\n"
            f"💡 Исправьте значение в .env или удалите строку, чтобы взять {default}."
        )


@dataclass(frozen=True)
class LoggingSettings:
    """Настройки логирования"""
    log_level: str = "INFO"
    log_file: str = ""

    @property
    def log_level_int(self) -> int:
        """Преобразует строковый уровень логирования в int"""
        level_map = {
            "DEBUG": logging.DEBUG,
            "INFO": logging.INFO,
            "WARNING": logging.WARNING,
            "ERROR": logging.ERROR,
            "CRITICAL": logging.CRITICAL,
        }
        return level_map.get(self.log_level.upper(), logging.INFO)

    @classmethod
    def from_env(cls) -> "LoggingSettings":
        return cls(
            log_level=os.getenv("LOG_LEVEL", "INFO"),
            log_file=os.getenv("LOG_FILE", "").strip(),
        )


@dataclass(frozen=True)
class EngineSettings:
    """Настройки движка размерностей Hom"""
    depth_bound: int = 64
    window_factor: int = 2

    @classmethod
    def from_env(cls) -> "EngineSettings":
        return cls(
            depth_bound=_env_int("HOMDIM_DEPTH_BOUND", 64),
            window_factor=_env_int("HOMDIM_WINDOW_FACTOR", 2),
        )


@dataclass(frozen=True)
class RewriteSettings:
    """Бюджеты переписывания"""
    klr_step_budget: int = 1_000_000
    sort_step_budget: int = 1_000_000

    @classmethod
    def from_env(cls) -> "RewriteSettings":
        return cls(
            klr_step_budget=_env_int("KLR_STEP_BUDGET", 1_000_000),
            sort_step_budget=_env_int("SORT_STEP_BUDGET", 1_000_000),
        )


@dataclass(frozen=True)
class SearchSettings:
    """Настройки поиска сертификатов по путям"""
    budget: int = 200_000
    slack: int = 2

    @classmethod
    def from_env(cls) -> "SearchSettings":
        return cls(
            budget=_env_int("SEARCH_BUDGET", 200_000),
            slack=_env_int("SEARCH_SLACK", 2),
        )


@dataclass(frozen=True)
class Settings:
    """Общие настройки приложения"""
    logging: LoggingSettings
    engine: EngineSettings
    rewrite: RewriteSettings
    search: SearchSettings

    @classmethod
    def from_env(cls) -> "Settings":
        """Создает настройки из переменных окружения"""
        return cls(
            logging=LoggingSettings.from_env(),
            engine=EngineSettings.from_env(),
            rewrite=RewriteSettings.from_env(),
            search=SearchSettings.from_env(),
        )

    def validate(self) -> None:
        """Валидирует настройки"""
        positive = {
            "HOMDIM_DEPTH_BOUND": self.engine.depth_bound,
            "HOMDIM_WINDOW_FACTOR": self.engine.window_factor,
            "KLR_STEP_BUDGET": self.rewrite.klr_step_budget,
            "SORT_STEP_BUDGET": self.rewrite.sort_step_budget,
            "SEARCH_BUDGET": self.search.budget,
        }
        for name, value in positive.items():
            if value <= 0:
                raise ValueError(f"❌ {name} должен быть положительным, получено: {value}")
        if self.search.slack < 0:
            raise ValueError(f"❌ SEARCH_SLACK не может быть отрицательным, получено: {self.search.slack}")

        if self.logging.log_file:
            log_dir = Path(self.logging.log_file).parent
            if log_dir and not log_dir.exists():
                log_dir.mkdir(parents=True, exist_ok=True)


# Глобальный экземпляр настроек (singleton pattern)
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Получает глобальный экземпляр настроек (singleton)"""
    global _settings
    if _settings is None:
        _settings = Settings.from_env()
        _settings.validate()
    return _settings


def reset_settings() -> None:
    """Сбрасывает singleton, следующий get_settings() перечитает окружение"""
    global _settings
    _settings = None
