"""Predicate notation: `name(var:type, ...)` parsing and canonical rendering."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DuplicateVariable, PredicateSyntaxError

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_-]*")
VAR_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*")
TYPE_RE = re.compile(r"[a-z][a-z0-9-]*")
EVENT_VAR_RE = re.compile(r"[es][0-9]*")

DEFAULT_TYPE = "top"


def var_sort(var: str) -> str:
    """`event` for e/s-prefixed numbered variables, else `individual`."""
    return "event" if EVENT_VAR_RE.fullmatch(var) else "individual"


@dataclass(frozen=True)
class TypedArg:
    var: str
    type: str = DEFAULT_TYPE

    @property
    def sort(self) -> str:
        return var_sort(self.var)

    def render(self) -> str:
        return f"{self.var}:{self.type}"


@dataclass(frozen=True)
class Predicate:
    name: str
    args: tuple[TypedArg, ...]

    def __post_init__(self):
        seen = set()
        for a in self.args:
            if a.var in seen:
                raise DuplicateVariable(f"{a.var!r} repeats in {self.name}")
            seen.add(a.var)

    @property
    def individual_args(self) -> tuple[TypedArg, ...]:
        """Argument positions for saturation counting; events are skipped."""
        return tuple(a for a in self.args if a.sort == "individual")


def render_predicate(p: Predicate) -> str:
    """Canonical form: no spaces, every type printed (including `top`)."""
    return f"{p.name}({','.join(a.render() for a in p.args)})"


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def byte_offset(self) -> int:
        return len(self.text[: self.pos].encode("utf-8"))

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def take(self, pattern: re.Pattern, what: str) -> str:
        self.skip_ws()
        m = pattern.match(self.text, self.pos)
        if not m:
            raise PredicateSyntaxError(f"expected {what}", self.byte_offset())
        self.pos = m.end()
        return m.group()

    def expect(self, char: str) -> None:
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != char:
            raise PredicateSyntaxError(f"expected {char!r}", self.byte_offset())
        self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""


def parse_predicate(text: str) -> Predicate:
    """Parse `name(arg, ...)` with `arg := var(:type)?`; untyped vars get `top`."""
    s = _Scanner(text)
    name = s.take(NAME_RE, "predicate name")
    s.expect("(")
    args = [_parse_arg(s)]
    while s.peek() == ",":
        s.expect(",")
        args.append(_parse_arg(s))
    s.expect(")")
    s.skip_ws()
    if s.pos != len(text):
        raise PredicateSyntaxError("trailing input", s.byte_offset())
    return Predicate(name, tuple(args))


def _parse_arg(s: _Scanner) -> TypedArg:
    var = s.take(VAR_RE, "variable")
    if s.peek() == ":":
        s.expect(":")
        typ = s.take(TYPE_RE, "type name")
    else:
        typ = DEFAULT_TYPE
    return TypedArg(var, typ)
