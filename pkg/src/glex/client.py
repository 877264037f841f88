"""Client library: query a running server or a local lexicon file with the
same operations, plus AVM-style pretty printing of entries.
"""

from __future__ import annotations

import os
from pathlib import Path

import httpx

from .anaphora import AnaphoraVerdict
from .entry import LexicalEntry, feature_at_path
from .errors import (
    AuthFailed,
    BadFilter,
    BadPath,
    BadTemplate,
    ConnectFailed,
    Forbidden,
    GlexError,
    NoRelation,
    NotFound,
    ParseError,
    UnknownWord,
    ValidationFailed,
)
from .ldif import export_ldif, import_ldif
from .lexicon import EntryKey, Lexicon
from .predicate import render_predicate
from .store import LexiconStore
from .wire import entry_from_json
from .xmlfmt import export_xml, import_xml
from . import anaphora


def pretty_print(entry: LexicalEntry) -> str:
    """Deterministic multi-line block: header, then ARGSTR / EVENTSTR /
    QUALIA sections; absent sections and roles are omitted.
    """
    flags = f"{entry.cat}, {entry.gender}"
    if entry.elision:
        flags += ", +elision"
    lines = [f"{entry.lemma} ({flags}) : {entry.lexical_type}"]
    if entry.args:
        lines.append("  ARGSTR")
        lines += [f"    ARG{i} = {a.render()}" for i, a in enumerate(entry.args, 1)]
    if entry.events:
        lines.append("  EVENTSTR")
        lines += [f"    EVENT{i} = {a.render()}" for i, a in enumerate(entry.events, 1)]
    q = entry.qualia
    if not q.is_empty():
        lines.append("  QUALIA")
        if q.formal:
            lines.append(f"    FORMAL = {render_predicate(q.formal)}")
        lines += [f"    CONST = {render_predicate(p)}" for p in q.const]
        if q.telic_state:
            lines.append(f"    STATE = {render_predicate(q.telic_state)}")
        if q.telic_trigger:
            lines.append(f"    TRIGGER = {render_predicate(q.telic_trigger)}")
        if q.telic_result:
            lines.append(f"    RESULT = {render_predicate(q.telic_result)}")
        if q.agentive:
            lines.append(f"    AGENTIVE = {render_predicate(q.agentive)}")
    return "\n".join(lines) + "\n"


class Connection:
    """One lexicon source, remote (HTTP) or local file, same read surface."""

    mode: str

    def search_word(self, word: str) -> list[EntryKey]:
        raise NotImplementedError

    def get_features(self, key: EntryKey) -> LexicalEntry:
        raise NotImplementedError

    def get_feature_value(self, key: EntryKey, path: str) -> list[str]:
        return feature_at_path(self.get_features(key), path)

    def save_lexicon(self, format: str, sink) -> None:
        _write(sink, self.export_document(format))

    def restore_lexicon(self, format: str, source) -> None:
        raise NotImplementedError

    def export_document(self, format: str) -> str:
        raise NotImplementedError

    def validate_anaphora(
        self, head: str, modifier: str, template: str, possessor_number: str = "sg"
    ) -> AnaphoraVerdict:
        raise NotImplementedError

    def close(self) -> None:
        pass


class LocalConnection(Connection):
    """Answers every read operation offline from a lexicon file."""

    mode = "local-file"

    def __init__(self, path: str | os.PathLike):
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ConnectFailed(str(exc))
        loader = import_xml if path.suffix == ".xml" else import_ldif
        self._path = path
        self._store = LexiconStore(loader(text))

    @property
    def lexicon(self) -> Lexicon:
        return self._store.snapshot()

    def search_word(self, word: str) -> list[EntryKey]:
        return self._store.search(word)

    def get_features(self, key: EntryKey) -> LexicalEntry:
        return self._store.fetch(key)

    def export_document(self, format: str) -> str:
        return _export(self.lexicon, format)

    def restore_lexicon(self, format: str, source) -> None:
        text = _read(source)
        lexicon = import_xml(text) if format == "xml" else import_ldif(text)
        self._store.replace(lexicon)

    def validate_anaphora(self, head, modifier, template, possessor_number="sg"):
        return anaphora.generate_variants(
            head, modifier, template, self.lexicon, possessor_number=possessor_number
        )


_ERROR_TYPES = {
    "AuthFailed": AuthFailed,
    "Forbidden": Forbidden,
    "NotFound": NotFound,
    "BadFilter": BadFilter,
    "BadPath": BadPath,
    "BadTemplate": BadTemplate,
    "ParseError": ParseError,
    "UnknownWord": UnknownWord,
}


class RemoteConnection(Connection):
    mode = "remote"

    def __init__(self, address: str, credentials: tuple[str, str] | None = None):
        self._client = httpx.Client(base_url=address.rstrip("/"), timeout=10.0)
        self._token: str | None = None
        try:
            if credentials:
                username, password = credentials
                body = self._request(
                    "POST", "/session", json={"username": username, "password": password}
                )
                self._token = body["token"]
            else:
                self._request("GET", "/types")
        except httpx.TransportError as exc:
            raise ConnectFailed(str(exc))

    def _request(self, method: str, url: str, **kwargs):
        headers = kwargs.pop("headers", {})
        if self._token:
            headers["Authorization"] = f"Bearer {self._token}"
        try:
            response = self._client.request(method, url, headers=headers, **kwargs)
        except httpx.TransportError as exc:
            raise ConnectFailed(str(exc))
        if response.status_code >= 400:
            self._raise_remote(response)
        return response.json() if response.content else None

    def _raise_remote(self, response: httpx.Response):
        try:
            body = response.json()
        except ValueError:
            body = {"error": "", "detail": response.text}
        name, detail = body.get("error", ""), body.get("detail", "")
        if name == "NoRelation":
            raise NoRelation(body.get("reasons", [detail]))
        if name == "ValidationFailed":
            from .entry import ValidationReport

            problems = tuple(
                ((p["key"]["lemma"], p["key"]["sense"]), p["path"], p["message"])
                for p in body.get("problems", [])
            )
            raise ValidationFailed(ValidationReport(problems))
        raise _ERROR_TYPES.get(name, GlexError)(detail)

    def search_word(self, word: str) -> list[EntryKey]:
        body = self._request("GET", "/entries", params={"filter": word})
        return [(r["lemma"], r["sense"]) for r in body["results"]]

    def get_features(self, key: EntryKey) -> LexicalEntry:
        body = self._request("GET", f"/entries/{key[0]}/{key[1]}")
        return entry_from_json(body)

    def get_feature_value(self, key: EntryKey, path: str) -> list[str]:
        body = self._request("GET", f"/entries/{key[0]}/{key[1]}/features/{path}")
        return body["values"]

    def export_document(self, format: str) -> str:
        try:
            response = self._client.get(
                "/lexicon/export",
                params={"format": format},
                headers={"Authorization": f"Bearer {self._token}"} if self._token else {},
            )
        except httpx.TransportError as exc:
            raise ConnectFailed(str(exc))
        if response.status_code >= 400:
            self._raise_remote(response)
        return response.text

    def restore_lexicon(self, format: str, source) -> None:
        self._request(
            "POST",
            f"/lexicon/import?format={format}",
            content=_read(source).encode("utf-8"),
        )

    def validate_anaphora(self, head, modifier, template, possessor_number="sg"):
        from .anaphora import AnaphoraVerdict, DeterminerKind, RelationCategory, Variant

        body = self._request(
            "POST",
            "/anaphora/validate",
            json={
                "head": head,
                "modifier": modifier,
                "template": template,
                "possessor_number": possessor_number,
            },
        )
        return AnaphoraVerdict(
            category=RelationCategory(body["category"]),
            licensing={DeterminerKind(k): v for k, v in body["licensing"].items()},
            variants=tuple(
                Variant(DeterminerKind(v["kind"]), v["sentence"], v["valid"])
                for v in body["variants"]
            ),
            diagnostics=tuple(body.get("diagnostics", ())),
        )

    def close(self) -> None:
        self._client.close()


def connect(address: str, credentials: tuple[str, str] | None = None) -> Connection:
    """`http(s)://...` opens a remote connection; anything else is a file path."""
    if address.startswith(("http://", "https://")):
        return RemoteConnection(address, credentials)
    return LocalConnection(address)


def _export(lexicon: Lexicon, format: str) -> str:
    if format == "ldif":
        return export_ldif(lexicon)
    if format == "xml":
        return export_xml(lexicon)
    raise BadFilter(f"unknown format {format!r}")


def _read(source) -> str:
    if isinstance(source, (str, os.PathLike)):
        return Path(source).read_text(encoding="utf-8")
    return source.read()


def _write(sink, text: str) -> None:
    if isinstance(sink, (str, os.PathLike)):
        Path(sink).write_text(text, encoding="utf-8")
    else:
        sink.write(text)
