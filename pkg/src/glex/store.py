"""In-process lexicon store: copy-on-write snapshots, single writer,
filter-based search, and optional flush-to-disk after each mutation.
"""

from __future__ import annotations

import os
import threading
from pathlib import Path

from .entry import DEFAULT_CONTAINMENT, FEATURE_PATHS, LexicalEntry, feature_at_path
from .errors import BadFilter, NotFound, ValidationFailed, Conflict
from .ldif import export_ldif
from .lexicon import EntryKey, Lexicon, key_sort
from .entry import validate_entry
from .wire import entry_hash

_FILTER_ATTRS = frozenset(FEATURE_PATHS)


class LexiconStore:
    """Holds the current Lexicon snapshot. Readers take the snapshot without
    locking; writers serialize on a lock and swap in a new snapshot, so a
    reader never sees a half-applied mutation.
    """

    def __init__(
        self,
        lexicon: Lexicon,
        path: str | os.PathLike | None = None,
        containment: frozenset[str] = DEFAULT_CONTAINMENT,
    ):
        self._lexicon = lexicon
        self._path = Path(path) if path else None
        self._containment = containment
        self._write_lock = threading.Lock()

    @property
    def containment(self) -> frozenset[str]:
        return self._containment

    def snapshot(self) -> Lexicon:
        return self._lexicon

    def fetch(self, key: EntryKey) -> LexicalEntry:
        entry = self._lexicon.entries.get(key)
        if entry is None:
            raise NotFound(f"lemma={key[0]},sense={key[1]}")
        return entry

    def search(self, filter_text: str) -> list[EntryKey]:
        """Exact lemma, `prefix*`, or `attr=value` filters, sorted keys."""
        lexicon = self._lexicon
        if not filter_text:
            raise BadFilter("empty filter")
        if "=" in filter_text:
            attr, _, value = filter_text.partition("=")
            if attr not in _FILTER_ATTRS:
                raise BadFilter(f"unknown attribute {attr!r}")
            if attr == "lexicalType" and value in lexicon.hierarchy:
                # Type filters honor subsumption: asking for `liquid`
                # returns everything typed at or below it.
                keys = [
                    k
                    for k, e in lexicon.entries.items()
                    if lexicon.hierarchy.subtype(e.lexical_type, value)
                ]
            else:
                keys = [
                    k
                    for k, e in lexicon.entries.items()
                    if value in feature_at_path(e, attr)
                ]
            return sorted(keys, key=key_sort)
        if filter_text.endswith("*"):
            prefix = filter_text[:-1]
            if "*" in prefix:
                raise BadFilter("only a single trailing * is supported")
            keys = [k for k in lexicon.entries if k[0].startswith(prefix)]
            return sorted(keys, key=key_sort)
        if "*" in filter_text:
            raise BadFilter("only a single trailing * is supported")
        return lexicon.keys_for_lemma(filter_text)

    def upsert(self, entry: LexicalEntry, expected_hash: str | None = None) -> EntryKey:
        with self._write_lock:
            current = self._lexicon
            if expected_hash is not None:
                existing = current.entries.get(entry.key)
                if existing is None or entry_hash(existing) != expected_hash:
                    raise Conflict(f"entry {entry.key} changed since it was fetched")
            report = validate_entry(entry, current.hierarchy, self._containment)
            if not report.ok:
                raise ValidationFailed(report)
            self._lexicon = current.with_entry(entry)
            self._flush()
        return entry.key

    def remove(self, key: EntryKey) -> None:
        with self._write_lock:
            if key not in self._lexicon.entries:
                raise NotFound(f"lemma={key[0]},sense={key[1]}")
            self._lexicon = self._lexicon.without_entry(key)
            self._flush()

    def replace(self, lexicon: Lexicon) -> None:
        lexicon.require_valid(self._containment)
        with self._write_lock:
            self._lexicon = lexicon
            self._flush()

    def flush(self) -> None:
        with self._write_lock:
            self._flush()

    def _flush(self) -> None:
        if self._path is None:
            return
        tmp = self._path.with_suffix(self._path.suffix + ".tmp")
        tmp.write_text(export_ldif(self._lexicon), encoding="utf-8")
        tmp.replace(self._path)
