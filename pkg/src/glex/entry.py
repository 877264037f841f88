"""Lexical entries: qualia structure, feature paths, and coherence checks."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BadPath
from .hierarchy import TypeHierarchy, is_type_name
from .predicate import DEFAULT_TYPE, Predicate, TypedArg, render_predicate

ENTRY_CLASS = "glEntry"
DEFAULT_CONTAINMENT = frozenset({"contain"})
CONST_PREDICATE = "part_of"


@dataclass(frozen=True)
class QualiaStructure:
    formal: Predicate | None = None
    const: tuple[Predicate, ...] = ()
    telic_state: Predicate | None = None
    telic_trigger: Predicate | None = None
    telic_result: Predicate | None = None
    agentive: Predicate | None = None

    def is_empty(self) -> bool:
        return not (
            self.formal
            or self.const
            or self.telic_state
            or self.telic_trigger
            or self.telic_result
            or self.agentive
        )


@dataclass(frozen=True)
class LexicalEntry:
    lemma: str
    cat: str
    gender: str
    lexical_type: str
    sense: int = 1
    elision: bool = False
    args: tuple[TypedArg, ...] = ()
    events: tuple[TypedArg, ...] = ()
    qualia: QualiaStructure = field(default_factory=QualiaStructure)

    @property
    def key(self) -> tuple[str, int]:
        return (self.lemma, self.sense)

    @property
    def distinguished_var(self) -> str | None:
        """The denoted variable: args[0] when present."""
        return self.args[0].var if self.args else None


@dataclass(frozen=True)
class ValidationReport:
    problems: tuple[tuple[tuple[str, int], str, str], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.problems


# Scalar feature paths and the value they read off an entry.
_SCALAR_PATHS = {
    "entryClass": lambda e: [ENTRY_CLASS],
    "lemma": lambda e: [e.lemma],
    "sense": lambda e: [str(e.sense)],
    "cat": lambda e: [e.cat],
    "gender": lambda e: [e.gender],
    "elision": lambda e: ["true" if e.elision else "false"],
    "lexicalType": lambda e: [e.lexical_type],
    "args": lambda e: [a.render() for a in e.args],
    "events": lambda e: [a.render() for a in e.events],
}

_QUALIA_PATHS = {
    "qualia.formal": lambda q: [q.formal] if q.formal else [],
    "qualia.const": lambda q: list(q.const),
    "qualia.telic.state": lambda q: [q.telic_state] if q.telic_state else [],
    "qualia.telic.trigger": lambda q: [q.telic_trigger] if q.telic_trigger else [],
    "qualia.telic.result": lambda q: [q.telic_result] if q.telic_result else [],
    "qualia.agentive": lambda q: [q.agentive] if q.agentive else [],
}

FEATURE_PATHS = tuple(_SCALAR_PATHS) + tuple(_QUALIA_PATHS)


def feature_at_path(entry: LexicalEntry, path: str) -> list[str]:
    """Rendered values at a dot-separated attribute path; [] for absent roles."""
    if path in _SCALAR_PATHS:
        return _SCALAR_PATHS[path](entry)
    if path in _QUALIA_PATHS:
        return [render_predicate(p) for p in _QUALIA_PATHS[path](entry.qualia)]
    raise BadPath(path)


def _qualia_roles(q: QualiaStructure):
    if q.formal:
        yield "qualia.formal", q.formal
    for i, p in enumerate(q.const):
        yield f"qualia.const[{i}]", p
    if q.telic_state:
        yield "qualia.telic.state", q.telic_state
    if q.telic_trigger:
        yield "qualia.telic.trigger", q.telic_trigger
    if q.telic_result:
        yield "qualia.telic.result", q.telic_result
    if q.agentive:
        yield "qualia.agentive", q.agentive


def validate_entry(
    entry: LexicalEntry,
    hierarchy: TypeHierarchy,
    containment: frozenset[str] = DEFAULT_CONTAINMENT,
) -> ValidationReport:
    """Report every violated entry invariant; problems are data, not errors."""
    problems: list[tuple[tuple[str, int], str, str]] = []
    key = entry.key

    def problem(path: str, message: str) -> None:
        problems.append((key, path, message))

    if not entry.lemma:
        problem("lemma", "lemma is empty")
    elif "," in entry.lemma or any(ch in entry.lemma for ch in "\n\r\t"):
        # Commas and control characters would corrupt the dn line.
        problem("lemma", f"lemma {entry.lemma!r} contains a reserved character")
    if entry.sense < 1:
        problem("sense", f"sense must be positive, got {entry.sense}")
    if not entry.cat:
        problem("cat", "category is empty")
    if entry.gender not in ("m", "f"):
        problem("gender", f"gender must be m or f, got {entry.gender!r}")
    if not is_type_name(entry.lexical_type):
        problem("lexicalType", f"bad type name {entry.lexical_type!r}")
    elif entry.lexical_type not in hierarchy:
        problem("lexicalType", f"unknown type {entry.lexical_type!r}")

    declared: dict[str, str] = {}
    for section, arglist in (("args", entry.args), ("events", entry.events)):
        for i, a in enumerate(arglist):
            path = f"{section}[{i}]"
            if a.type not in hierarchy:
                problem(path, f"unknown type {a.type!r}")
            if a.var in declared:
                problem(path, f"variable {a.var!r} declared twice")
            declared[a.var] = a.type
            if section == "events" and a.sort != "event":
                problem(path, f"{a.var!r} is not an event variable")

    for path, pred in _qualia_roles(entry.qualia):
        if path.startswith("qualia.const") and pred.name != CONST_PREDICATE:
            problem(path, f"constitutive predicate must be named {CONST_PREDICATE}")
        if path == "qualia.telic.state" and pred.name not in containment:
            problem(path, f"telic state predicate {pred.name!r} is not a containment predicate")
        for a in pred.args:
            if a.type not in hierarchy:
                problem(path, f"unknown type {a.type!r}")
            # A variable reusing a declared name must keep the declared
            # type; a bare (top) occurrence counts as underspecified.
            decl = declared.get(a.var)
            if decl is not None and a.type not in (decl, DEFAULT_TYPE):
                problem(path, f"{a.var!r} declared as {decl!r} but used as {a.type!r}")

    return ValidationReport(tuple(problems))
