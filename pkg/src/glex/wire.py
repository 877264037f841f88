"""JSON wire representation of entries, keys, and anaphora verdicts."""

from __future__ import annotations

import hashlib

from .anaphora import AnaphoraVerdict
from .entry import LexicalEntry, QualiaStructure
from .errors import ParseError
from .ldif import _entry_record
from .predicate import Predicate, TypedArg, parse_predicate, render_predicate


def key_to_json(key: tuple[str, int]) -> dict:
    return {"lemma": key[0], "sense": key[1]}


def entry_to_json(e: LexicalEntry) -> dict:
    q = e.qualia
    return {
        "lemma": e.lemma,
        "sense": e.sense,
        "cat": e.cat,
        "gender": e.gender,
        "elision": e.elision,
        "lexicalType": e.lexical_type,
        "args": [a.render() for a in e.args],
        "events": [a.render() for a in e.events],
        "qualia": {
            "formal": _opt(q.formal),
            "const": [render_predicate(p) for p in q.const],
            "telicState": _opt(q.telic_state),
            "telicTrigger": _opt(q.telic_trigger),
            "telicResult": _opt(q.telic_result),
            "agentive": _opt(q.agentive),
        },
    }


def entry_from_json(doc: dict) -> LexicalEntry:
    try:
        qualia = doc.get("qualia") or {}
        return LexicalEntry(
            lemma=doc["lemma"],
            sense=int(doc.get("sense", 1)),
            cat=doc["cat"],
            gender=doc["gender"],
            elision=bool(doc.get("elision", False)),
            lexical_type=doc["lexicalType"],
            args=tuple(_typed_arg(t) for t in doc.get("args", [])),
            events=tuple(_typed_arg(t) for t in doc.get("events", [])),
            qualia=QualiaStructure(
                formal=_opt_parse(qualia.get("formal")),
                const=tuple(parse_predicate(t) for t in qualia.get("const", [])),
                telic_state=_opt_parse(qualia.get("telicState")),
                telic_trigger=_opt_parse(qualia.get("telicTrigger")),
                telic_result=_opt_parse(qualia.get("telicResult")),
                agentive=_opt_parse(qualia.get("agentive")),
            ),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad entry document: {exc}")


def entry_hash(e: LexicalEntry) -> str:
    """Content hash used for compare-and-set writes (ETag / If-Match)."""
    return hashlib.sha256(_entry_record(e).encode("utf-8")).hexdigest()


def verdict_to_json(v: AnaphoraVerdict) -> dict:
    return {
        "category": v.category.value,
        "licensing": {kind.value: ok for kind, ok in v.licensing.items()},
        "variants": [
            {"kind": var.kind.value, "sentence": var.sentence, "valid": var.valid}
            for var in v.variants
        ],
        "diagnostics": list(v.diagnostics),
    }


def _opt(p: Predicate | None) -> str | None:
    return render_predicate(p) if p else None


def _opt_parse(text: str | None) -> Predicate | None:
    return parse_predicate(text) if text else None


def _typed_arg(text: str) -> TypedArg:
    if ":" not in text:
        raise ValueError(f"expected var:type, got {text!r}")
    var, typ = text.split(":", 1)
    return TypedArg(var, typ)
