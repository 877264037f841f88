"""Partial order over type names: subsumption and comparable-pair unification."""

from __future__ import annotations

import re
from typing import Iterable, Mapping

from .errors import DuplicateType, UnknownType

TYPE_NAME_RE = re.compile(r"[a-z][a-z0-9-]*")


def is_type_name(name: str) -> bool:
    return bool(TYPE_NAME_RE.fullmatch(name))


class TypeHierarchy:
    """Immutable DAG of type names; every node except the root has parents.

    `parents` maps each node to its immediate supertypes; the root maps
    to the empty set.
    """

    __slots__ = ("root", "_parents")

    def __init__(self, root: str, parents: Mapping[str, Iterable[str]]):
        if not is_type_name(root):
            raise UnknownType(f"bad root name: {root!r}")
        frozen: dict[str, frozenset[str]] = {}
        for name, ps in parents.items():
            if not is_type_name(name):
                raise UnknownType(f"bad type name: {name!r}")
            frozen[name] = frozenset(ps)
        frozen.setdefault(root, frozenset())
        if frozen[root]:
            raise UnknownType(f"root {root!r} must have no parents")
        for name, ps in frozen.items():
            if name != root and not ps:
                raise UnknownType(f"non-root type {name!r} has no parents")
            for p in ps:
                if p not in frozen:
                    raise UnknownType(f"unknown parent {p!r} of {name!r}")
        self.root = root
        self._parents = frozen
        self._check_acyclic()

    def _check_acyclic(self) -> None:
        seen: dict[str, int] = {}  # 0=visiting, 1=done

        def visit(n: str) -> None:
            state = seen.get(n)
            if state == 0:
                raise UnknownType(f"cycle through type {n!r}")
            if state == 1:
                return
            seen[n] = 0
            for p in self._parents[n]:
                visit(p)
            seen[n] = 1

        for n in self._parents:
            visit(n)

    @property
    def nodes(self) -> frozenset[str]:
        return frozenset(self._parents)

    def __contains__(self, name: str) -> bool:
        return name in self._parents

    def parents(self, name: str) -> frozenset[str]:
        self._require(name)
        return self._parents[name]

    def ancestors(self, name: str) -> frozenset[str]:
        """All supertypes of `name`, including itself."""
        self._require(name)
        out = {name}
        stack = [name]
        while stack:
            for p in self._parents[stack.pop()]:
                if p not in out:
                    out.add(p)
                    stack.append(p)
        return frozenset(out)

    def subtype(self, a: str, b: str) -> bool:
        """True iff `a` = `b` or `a` reaches `b` through parent edges."""
        self._require(a)
        self._require(b)
        return b in self.ancestors(a)

    def unify(self, a: str, b: str) -> str | None:
        """The more specific of two comparable types; None when incomparable.

        A common descendant that is neither `a` nor `b` does not count:
        unification only resolves subsumption-comparable pairs.
        """
        if self.subtype(a, b):
            return a
        if self.subtype(b, a):
            return b
        return None

    def add(self, name: str, parents: Iterable[str]) -> "TypeHierarchy":
        """New hierarchy with `name` under `parents` (nonempty, existing)."""
        parents = list(parents)
        if name in self._parents:
            raise DuplicateType(name)
        if not parents:
            raise UnknownType(f"new type {name!r} needs at least one parent")
        for p in parents:
            self._require(p)
        extended = dict(self._parents)
        extended[name] = frozenset(parents)
        return TypeHierarchy(self.root, extended)

    def topological_order(self) -> list[str]:
        """Parents before children; lexicographic among the ready set."""
        remaining = {n: set(ps) for n, ps in self._parents.items()}
        order: list[str] = []
        while remaining:
            ready = sorted(n for n, ps in remaining.items() if not ps)
            for n in ready:
                order.append(n)
                del remaining[n]
            for ps in remaining.values():
                ps.difference_update(ready)
        return order

    def _require(self, name: str) -> None:
        if name not in self._parents:
            raise UnknownType(name)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TypeHierarchy)
            and self.root == other.root
            and self._parents == other._parents
        )

    def __hash__(self) -> int:
        return hash((self.root, frozenset(self._parents.items())))

    def __repr__(self) -> str:
        return f"TypeHierarchy(root={self.root!r}, {len(self._parents)} nodes)"
