# -*- coding: utf-8 -*-
"""
Настройка логирования для запуска из командной строки

stdout занят JSON-отчетом, поэтому журнал пишется в stderr
и, если задан LOG_FILE, в файл.
"""
import logging
import sys
from typing import List

from config.settings import LoggingSettings

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logging(settings: LoggingSettings) -> None:
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if settings.log_file:
        handlers.append(logging.FileHandler(settings.log_file, encoding='utf-8'))
    logging.basicConfig(
        level=settings.log_level_int,
        format=LOG_FORMAT,
        handlers=handlers,
    )
