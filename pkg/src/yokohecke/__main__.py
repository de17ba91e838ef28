"""Module entry point: ``python -m yokohecke``."""

from .cli import entry

if __name__ == "__main__":
    entry()
