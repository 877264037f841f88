"""Loader for the bundled seed lexicon."""

from __future__ import annotations

from importlib import resources

from .ldif import import_ldif
from .lexicon import Lexicon


def seed_text() -> str:
    return (resources.files("glex") / "data" / "seed.ldif").read_text(encoding="utf-8")


def load_seed() -> Lexicon:
    return import_ldif(seed_text())
