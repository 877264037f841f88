"""XML lexicon serialization; same data model and ordering as the LDIF codec."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from xml.sax.saxutils import escape, quoteattr

from .entry import LexicalEntry, QualiaStructure
from .errors import DuplicateKey, ParseError, UnknownType, ValidationFailed
from .entry import ValidationReport
from .hierarchy import TypeHierarchy
from .lexicon import Lexicon
from .predicate import Predicate, TypedArg, parse_predicate, render_predicate

_HEADER = '<?xml version="1.0" encoding="UTF-8"?>'


def export_xml(lexicon: Lexicon) -> str:
    out = [_HEADER, "<lexicon>", "  <types>"]
    h = lexicon.hierarchy
    for name in h.topological_order():
        parents = sorted(h.parents(name))
        if not parents:
            out.append(f"    <type name={quoteattr(name)}/>")
        else:
            out.append(f"    <type name={quoteattr(name)}>")
            out += [f"      <parent>{escape(p)}</parent>" for p in parents]
            out.append("    </type>")
    out += ["  </types>", "  <entries>"]
    for key in lexicon.sorted_keys():
        out += _entry_xml(lexicon.entries[key])
    out += ["  </entries>", "</lexicon>"]
    return "\n".join(out) + "\n"


def _entry_xml(e: LexicalEntry) -> list[str]:
    out = [f"    <entry lemma={quoteattr(e.lemma)} sense={quoteattr(str(e.sense))}>"]

    def leaf(tag, text, indent="      "):
        out.append(f"{indent}<{tag}>{escape(text)}</{tag}>")

    leaf("cat", e.cat)
    leaf("gender", e.gender)
    leaf("elision", "true" if e.elision else "false")
    leaf("lexicalType", e.lexical_type)
    for a in e.args:
        leaf("arg", a.render())
    for a in e.events:
        leaf("event", a.render())
    q = e.qualia
    if not q.is_empty():
        out.append("      <qualia>")
        if q.formal:
            leaf("formal", render_predicate(q.formal), "        ")
        for p in q.const:
            leaf("const", render_predicate(p), "        ")
        if q.telic_state or q.telic_trigger or q.telic_result:
            out.append("        <telic>")
            if q.telic_state:
                leaf("state", render_predicate(q.telic_state), "          ")
            if q.telic_trigger:
                leaf("trigger", render_predicate(q.telic_trigger), "          ")
            if q.telic_result:
                leaf("result", render_predicate(q.telic_result), "          ")
            out.append("        </telic>")
        if q.agentive:
            leaf("agentive", render_predicate(q.agentive), "        ")
        out.append("      </qualia>")
    out.append("    </entry>")
    return out


def import_xml(text: str) -> Lexicon:
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        raise ParseError(str(exc), exc.position[0] if exc.position else 0)
    if root.tag != "lexicon":
        raise ParseError(f"expected <lexicon> root, got <{root.tag}>")
    types_el = root.find("types")
    entries_el = root.find("entries")
    if types_el is None or entries_el is None:
        raise ParseError("<lexicon> must contain <types> and <entries>")

    type_parents: dict[str, list[str]] = {}
    roots: list[str] = []
    for t in types_el:
        if t.tag != "type":
            raise ParseError(f"unexpected element <{t.tag}> under <types>")
        name = t.get("name")
        if not name:
            raise ParseError("<type> missing name attribute")
        if name in type_parents:
            raise DuplicateKey(f"type {name!r}")
        parents = []
        for p in t:
            if p.tag != "parent":
                raise ParseError(f"unexpected element <{p.tag}> under <type>")
            parents.append(p.text or "")
        type_parents[name] = parents
        if not parents:
            roots.append(name)

    entries: dict[tuple[str, int], LexicalEntry] = {}
    for el in entries_el:
        if el.tag != "entry":
            raise ParseError(f"unexpected element <{el.tag}> under <entries>")
        entry = _parse_entry(el)
        if entry.key in entries:
            raise DuplicateKey(f"lemma={entry.lemma},sense={entry.sense}")
        entries[entry.key] = entry

    if len(roots) != 1:
        raise ParseError(f"expected exactly one root type, found {len(roots)}")
    try:
        hierarchy = TypeHierarchy(roots[0], type_parents)
    except UnknownType as exc:
        raise ValidationFailed(ValidationReport(((("", 0), "types", str(exc)),)))
    return Lexicon(hierarchy, entries).require_valid()


_ENTRY_SCALARS = ("cat", "gender", "lexicalType", "elision")
_TELIC_TAGS = ("state", "trigger", "result")


def _parse_entry(el: ET.Element) -> LexicalEntry:
    lemma = el.get("lemma")
    sense_text = el.get("sense")
    if not lemma or not sense_text or not sense_text.isdigit() or int(sense_text) < 1:
        raise ParseError("<entry> needs lemma and positive sense attributes")
    scalars: dict[str, str] = {}
    args: list[TypedArg] = []
    events: list[TypedArg] = []
    preds: dict[str, Predicate] = {}
    const: list[Predicate] = []
    for child in el:
        tag, text = child.tag, child.text or ""
        if tag in _ENTRY_SCALARS:
            if tag in scalars:
                raise ParseError(f"repeated element <{tag}>")
            scalars[tag] = text
        elif tag == "arg":
            args.append(_typed_arg(text))
        elif tag == "event":
            events.append(_typed_arg(text))
        elif tag == "qualia":
            _parse_qualia(child, preds, const)
        else:
            raise ParseError(f"unexpected element <{tag}> under <entry>")
    for required in _ENTRY_SCALARS:
        if required not in scalars:
            raise ParseError(f"<entry> missing <{required}>")
    if scalars["gender"] not in ("m", "f"):
        raise ParseError(f"gender must be m or f, got {scalars['gender']!r}")
    if scalars["elision"] not in ("true", "false"):
        raise ParseError(f"elision must be true or false, got {scalars['elision']!r}")
    return LexicalEntry(
        lemma=lemma,
        sense=int(sense_text),
        cat=scalars["cat"],
        gender=scalars["gender"],
        elision=scalars["elision"] == "true",
        lexical_type=scalars["lexicalType"],
        args=tuple(args),
        events=tuple(events),
        qualia=QualiaStructure(
            formal=preds.get("formal"),
            const=tuple(const),
            telic_state=preds.get("state"),
            telic_trigger=preds.get("trigger"),
            telic_result=preds.get("result"),
            agentive=preds.get("agentive"),
        ),
    )


def _parse_qualia(el: ET.Element, preds: dict, const: list) -> None:
    for child in el:
        tag, text = child.tag, child.text or ""
        if tag in ("formal", "agentive"):
            if tag in preds:
                raise ParseError(f"repeated element <{tag}>")
            preds[tag] = _pred(text)
        elif tag == "const":
            const.append(_pred(text))
        elif tag == "telic":
            for sub in child:
                if sub.tag not in _TELIC_TAGS:
                    raise ParseError(f"unexpected element <{sub.tag}> under <telic>")
                if sub.tag in preds:
                    raise ParseError(f"repeated element <{sub.tag}>")
                preds[sub.tag] = _pred(sub.text or "")
        else:
            raise ParseError(f"unexpected element <{tag}> under <qualia>")


def _typed_arg(text: str) -> TypedArg:
    if ":" not in text:
        raise ParseError(f"expected var:type, got {text!r}")
    var, typ = text.split(":", 1)
    return TypedArg(var, typ)


def _pred(text: str) -> Predicate:
    from .errors import GlexError

    try:
        return parse_predicate(text)
    except GlexError as exc:
        raise ParseError(str(exc))
