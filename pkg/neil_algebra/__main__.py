"""
Точка входа для запуска как модуля: python -m neil_algebra
"""

from neil_algebra.cli import cli

if __name__ == '__main__':
    cli()
