"""LDIF-style lexicon serialization: byte-deterministic export, strict import."""

from __future__ import annotations

import re

from .entry import ENTRY_CLASS, LexicalEntry, QualiaStructure, ValidationReport
from .errors import DuplicateKey, GlexError, ParseError, UnknownType, ValidationFailed
from .hierarchy import TypeHierarchy
from .lexicon import Lexicon
from .predicate import Predicate, TypedArg, parse_predicate, render_predicate

_ARG_LINE_RE = re.compile(r"(arg|event)([1-9][0-9]*)")
_DN_ENTRY_RE = re.compile(r"lemma=([^,]+),sense=([1-9][0-9]*)")
_DN_TYPE_RE = re.compile(r"type=([a-z][a-z0-9-]*)")

_PRED_ATTRS = ("formal", "telicState", "telicTrigger", "telicResult", "agentive")
_SCALAR_ATTRS = ("entryClass", "lemma", "sense", "cat", "gender", "elision", "lexicalType")


def export_ldif(lexicon: Lexicon) -> str:
    records = []
    h = lexicon.hierarchy
    for name in h.topological_order():
        lines = [f"dn: type={name}"]
        lines += [f"parent: {p}" for p in sorted(h.parents(name))]
        records.append("\n".join(lines))
    for key in lexicon.sorted_keys():
        records.append(_entry_record(lexicon.entries[key]))
    return "\n\n".join(records) + "\n"


def _entry_record(e: LexicalEntry) -> str:
    lines = [
        f"dn: lemma={e.lemma},sense={e.sense}",
        f"entryClass: {ENTRY_CLASS}",
        f"lemma: {e.lemma}",
        f"sense: {e.sense}",
        f"cat: {e.cat}",
        f"gender: {e.gender}",
        f"elision: {'true' if e.elision else 'false'}",
        f"lexicalType: {e.lexical_type}",
    ]
    lines += [f"arg{i}: {a.render()}" for i, a in enumerate(e.args, 1)]
    lines += [f"event{i}: {a.render()}" for i, a in enumerate(e.events, 1)]
    q = e.qualia
    if q.formal:
        lines.append(f"formal: {render_predicate(q.formal)}")
    lines += [f"const: {render_predicate(p)}" for p in q.const]
    if q.telic_state:
        lines.append(f"telicState: {render_predicate(q.telic_state)}")
    if q.telic_trigger:
        lines.append(f"telicTrigger: {render_predicate(q.telic_trigger)}")
    if q.telic_result:
        lines.append(f"telicResult: {render_predicate(q.telic_result)}")
    if q.agentive:
        lines.append(f"agentive: {render_predicate(q.agentive)}")
    return "\n".join(lines)


def import_ldif(text: str) -> Lexicon:
    """Parse and validate a whole lexicon; load is all-or-nothing."""
    records = _split_records(text)
    type_parents: dict[str, list[str]] = {}
    roots: list[str] = []
    entries: dict[tuple[str, int], LexicalEntry] = {}
    for first_line_no, attrs in records:
        dn = attrs[0]
        if dn[0] != "dn":
            raise ParseError("record must start with dn", first_line_no)
        m = _DN_TYPE_RE.fullmatch(dn[1])
        if m:
            name = m.group(1)
            if name in type_parents:
                raise DuplicateKey(f"type {name!r}")
            parents = []
            for line_no, (attr, value) in _body(attrs, first_line_no):
                if attr != "parent":
                    raise ParseError(f"unknown attribute {attr!r} in type record", line_no)
                parents.append(value)
            type_parents[name] = parents
            if not parents:
                roots.append(name)
            continue
        m = _DN_ENTRY_RE.fullmatch(dn[1])
        if m:
            entry = _parse_entry(m.group(1), int(m.group(2)), attrs, first_line_no)
            if entry.key in entries:
                raise DuplicateKey(f"lemma={entry.lemma},sense={entry.sense}")
            entries[entry.key] = entry
            continue
        raise ParseError(f"unrecognized dn {dn[1]!r}", first_line_no)

    if len(roots) != 1:
        raise ParseError(f"expected exactly one root type, found {len(roots)}")
    try:
        hierarchy = TypeHierarchy(roots[0], type_parents)
    except UnknownType as exc:
        raise ValidationFailed(ValidationReport(((("", 0), "types", str(exc)),)))
    return Lexicon(hierarchy, entries).require_valid()


def _split_records(text: str):
    """Yield (first line number, [(attr, value), ...]) per blank-line-separated record."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    records = []
    current: list[tuple[str, str]] = []
    start = 1
    for i, line in enumerate(lines, 1):
        if line == "":
            if not current:
                raise ParseError("empty record", i)
            records.append((start, current))
            current = []
            start = i + 1
            continue
        if ": " not in line:
            raise ParseError(f"expected 'attr: value', got {line!r}", i)
        attr, value = line.split(": ", 1)
        current.append((attr, value))
    if current:
        records.append((start, current))
    elif records:
        raise ParseError("trailing blank line", len(lines))
    return records


def _body(attrs, first_line_no):
    for offset, pair in enumerate(attrs[1:], 1):
        yield first_line_no + offset, pair


def _parse_entry(lemma: str, sense: int, attrs, first_line_no) -> LexicalEntry:
    scalars: dict[str, str] = {}
    args: dict[int, TypedArg] = {}
    events: dict[int, TypedArg] = {}
    preds: dict[str, Predicate] = {}
    const: list[Predicate] = []
    for line_no, (attr, value) in _body(attrs, first_line_no):
        if attr in _SCALAR_ATTRS:
            if attr in scalars:
                raise ParseError(f"repeated attribute {attr!r}", line_no)
            scalars[attr] = value
            continue
        m = _ARG_LINE_RE.fullmatch(attr)
        if m:
            slot = args if m.group(1) == "arg" else events
            idx = int(m.group(2))
            if idx in slot:
                raise ParseError(f"repeated attribute {attr!r}", line_no)
            slot[idx] = _parse_typed_arg(value, line_no)
            continue
        if attr == "const":
            const.append(_parse_pred(value, line_no))
            continue
        if attr in _PRED_ATTRS:
            if attr in preds:
                raise ParseError(f"repeated attribute {attr!r}", line_no)
            preds[attr] = _parse_pred(value, line_no)
            continue
        raise ParseError(f"unknown attribute {attr!r}", line_no)

    for required in ("entryClass", "lemma", "sense", "cat", "gender", "elision", "lexicalType"):
        if required not in scalars:
            raise ParseError(f"missing attribute {required!r} in entry record", first_line_no)
    if scalars["entryClass"] != ENTRY_CLASS:
        raise ParseError(f"entryClass must be {ENTRY_CLASS}", first_line_no)
    if scalars["lemma"] != lemma or scalars["sense"] != str(sense):
        raise ParseError("dn does not match lemma/sense attributes", first_line_no)
    if scalars["gender"] not in ("m", "f"):
        raise ParseError(f"gender must be m or f, got {scalars['gender']!r}", first_line_no)
    if scalars["elision"] not in ("true", "false"):
        raise ParseError(f"elision must be true or false, got {scalars['elision']!r}", first_line_no)
    for slot, name in ((args, "arg"), (events, "event")):
        if sorted(slot) != list(range(1, len(slot) + 1)):
            raise ParseError(f"{name} numbering must be contiguous from 1", first_line_no)
    return LexicalEntry(
        lemma=lemma,
        sense=sense,
        cat=scalars["cat"],
        gender=scalars["gender"],
        elision=scalars["elision"] == "true",
        lexical_type=scalars["lexicalType"],
        args=tuple(args[i] for i in sorted(args)),
        events=tuple(events[i] for i in sorted(events)),
        qualia=QualiaStructure(
            formal=preds.get("formal"),
            const=tuple(const),
            telic_state=preds.get("telicState"),
            telic_trigger=preds.get("telicTrigger"),
            telic_result=preds.get("telicResult"),
            agentive=preds.get("agentive"),
        ),
    )


def _parse_typed_arg(value: str, line_no: int) -> TypedArg:
    if ":" not in value:
        raise ParseError(f"expected var:type, got {value!r}", line_no)
    var, typ = value.split(":", 1)
    return TypedArg(var, typ)


def _parse_pred(value: str, line_no: int) -> Predicate:
    try:
        return parse_predicate(value)
    except GlexError as exc:
        raise ParseError(str(exc), line_no)
