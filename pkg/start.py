#!/usr/bin/env python3
"""
Универсальный скрипт запуска калькулятора минимальных категорных действий
Работает на Windows, Linux и macOS

Аргументы после имени скрипта передаются командной строке без изменений:
    python start.py qint 3
    python start.py paths canonical --grassmannian 2,3,2 --to "[1,1]"
"""

import sys
import subprocess
import platform
from pathlib import Path


def print_banner():
    """Выводит баннер запуска в stderr (stdout занят JSON-отчетом)"""
    print("🧮 Minimal categorical actions - calculator", file=sys.stderr)
    print("=" * 40, file=sys.stderr)
    print(f"🖥️  Платформа: {platform.system()} {platform.release()}", file=sys.stderr)
    print(f"🐍 Python: {sys.version}", file=sys.stderr)
    print("=" * 40, file=sys.stderr)


def check_python_version():
    """Проверяет версию Python"""
    if sys.version_info < (3, 9):
        print("❌ Требуется Python 3.9 или выше!", file=sys.stderr)
        print(f"📊 Текущая версия: {sys.version}", file=sys.stderr)
        return False
    return True


def check_env_file():
    """Создает .env из шаблона, если его нет; файл необязателен"""
    env_path = Path(".env")
    if env_path.exists():
        return
    example_path = Path("env_example.txt")
    if example_path.exists():
        print("📝 Создаем .env из шаблона...", file=sys.stderr)
        with open(example_path, 'r', encoding='utf-8') as f:
            content = f.read()
        with open(env_path, 'w', encoding='utf-8') as f:
            f.write(content)
        print("✅ Файл .env создан из шаблона со значениями по умолчанию", file=sys.stderr)


def install_requirements():
    """Устанавливает зависимости"""
    print("📦 Проверка зависимостей...", file=sys.stderr)

    try:
        # Проверяем, установлены ли основные пакеты
        import dotenv
        import networkx
        import numpy
        import sympy
        print("✅ Основные зависимости уже установлены", file=sys.stderr)
        return True
    except ImportError:
        print("📦 Установка зависимостей...", file=sys.stderr)

        try:
            subprocess.check_call([
                sys.executable, "-m", "pip", "install", "-r", "requirements.txt"
            ])
            print("✅ Зависимости установлены успешно", file=sys.stderr)
            return True
        except subprocess.CalledProcessError as e:
            print(f"❌ Ошибка установки зависимостей: {e}", file=sys.stderr)
            return False


def start_cli(argv):
    """Передает аргументы командной строке и возвращает код выхода"""
    try:
        from cli.main import run
        return run(argv)
    except KeyboardInterrupt:
        print("\n🛑 Вычисление прервано", file=sys.stderr)
        return 130


def main():
    """Основная функция"""
    print_banner()

    # Проверяем версию Python
    if not check_python_version():
        sys.exit(1)

    check_env_file()

    # Устанавливаем зависимости
    if not install_requirements():
        sys.exit(1)

    argv = sys.argv[1:] or ["--help"]
    sys.exit(start_cli(argv))


if __name__ == "__main__":
    main()
