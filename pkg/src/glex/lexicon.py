"""The stored object: a type hierarchy plus a keyed set of entries."""

from __future__ import annotations

from typing import Iterable, Mapping

from .entry import DEFAULT_CONTAINMENT, LexicalEntry, ValidationReport, validate_entry
from .errors import ValidationFailed
from .hierarchy import TypeHierarchy

EntryKey = tuple[str, int]


def key_sort(key: EntryKey) -> tuple[bytes, int]:
    """Byte order on the lemma, then sense."""
    lemma, sense = key
    return (lemma.encode("utf-8"), sense)


class Lexicon:
    """Immutable snapshot: hierarchy + entries, with an exact-lemma index."""

    __slots__ = ("hierarchy", "entries", "_by_lemma")

    def __init__(self, hierarchy: TypeHierarchy, entries: Mapping[EntryKey, LexicalEntry]):
        self.hierarchy = hierarchy
        self.entries: dict[EntryKey, LexicalEntry] = dict(entries)
        by_lemma: dict[str, list[EntryKey]] = {}
        for key in self.entries:
            by_lemma.setdefault(key[0], []).append(key)
        for keys in by_lemma.values():
            keys.sort(key=key_sort)
        self._by_lemma = by_lemma

    def validate(self, containment=DEFAULT_CONTAINMENT) -> ValidationReport:
        problems = []
        for key in sorted(self.entries, key=key_sort):
            report = validate_entry(self.entries[key], self.hierarchy, containment)
            problems.extend(report.problems)
        return ValidationReport(tuple(problems))

    def require_valid(self, containment=DEFAULT_CONTAINMENT) -> "Lexicon":
        report = self.validate(containment)
        if not report.ok:
            raise ValidationFailed(report)
        return self

    def keys_for_lemma(self, lemma: str) -> list[EntryKey]:
        return list(self._by_lemma.get(lemma, ()))

    def sorted_keys(self) -> list[EntryKey]:
        return sorted(self.entries, key=key_sort)

    def with_entry(self, entry: LexicalEntry) -> "Lexicon":
        entries = dict(self.entries)
        entries[entry.key] = entry
        return Lexicon(self.hierarchy, entries)

    def without_entry(self, key: EntryKey) -> "Lexicon":
        entries = dict(self.entries)
        del entries[key]
        return Lexicon(self.hierarchy, entries)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Lexicon)
            and self.hierarchy == other.hierarchy
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return f"Lexicon({len(self.entries)} entries, {len(self.hierarchy.nodes)} types)"
