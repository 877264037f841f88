import itertools

import pytest

from glex.errors import DuplicateType, UnknownType
from glex.hierarchy import TypeHierarchy

from .conftest import SEED_PATH


def seed_edges_by_hand():
    """Parent map read straight off the seed file's type records, without
    going through the lexicon codec.
    """
    parents = {}
    current = None
    for line in SEED_PATH.read_text(encoding="utf-8").splitlines():
        if line.startswith("dn: type="):
            current = line[len("dn: type="):]
            parents[current] = set()
        elif line.startswith("parent: ") and current is not None:
            parents[current].add(line[len("parent: "):])
        elif line.startswith("dn: lemma="):
            current = None
    return parents


def brute_force_closure(parents):
    """Reflexive-transitive closure by saturation."""
    reach = {n: {n} | ps for n, ps in parents.items()}
    changed = True
    while changed:
        changed = False
        for n in reach:
            extra = set().union(*(reach[p] for p in reach[n])) - reach[n]
            if extra:
                reach[n] |= extra
                changed = True
    return reach


@pytest.fixture(scope="module")
def closure():
    return brute_force_closure(seed_edges_by_hand())


class TestSubtypeAgainstOracle:
    def test_all_pairs(self, hierarchy, closure):
        nodes = sorted(hierarchy.nodes)
        assert set(nodes) == set(closure)
        for a, b in itertools.product(nodes, repeat=2):
            assert hierarchy.subtype(a, b) == (b in closure[a]), (a, b)

    def test_examples(self, hierarchy):
        assert hierarchy.subtype("cider", "liquid")
        assert not hierarchy.subtype("liquid", "cider")
        assert not hierarchy.subtype("fruit", "liquid")

    def test_reflexive(self, hierarchy):
        for t in hierarchy.nodes:
            assert hierarchy.subtype(t, t)

    def test_partial_order(self, hierarchy):
        nodes = sorted(hierarchy.nodes)
        for a, b in itertools.product(nodes, repeat=2):
            if hierarchy.subtype(a, b) and hierarchy.subtype(b, a):
                assert a == b  # antisymmetry
        for a, b, c in itertools.product(nodes, repeat=3):
            if hierarchy.subtype(a, b) and hierarchy.subtype(b, c):
                assert hierarchy.subtype(a, c)  # transitivity

    def test_unknown_type(self, hierarchy):
        with pytest.raises(UnknownType):
            hierarchy.subtype("nope", "top")
        with pytest.raises(UnknownType):
            hierarchy.subtype("top", "nope")


class TestUnify:
    def test_examples(self, hierarchy):
        assert hierarchy.unify("liquid", "cider") == "cider"
        assert hierarchy.unify("cider", "cider") == "cider"
        assert hierarchy.unify("fruit", "liquid") is None

    def test_commutative_and_lower_bound(self, hierarchy):
        nodes = sorted(hierarchy.nodes)
        for a, b in itertools.product(nodes, repeat=2):
            c = hierarchy.unify(a, b)
            assert c == hierarchy.unify(b, a)
            if c is not None:
                assert hierarchy.subtype(c, a)
                assert hierarchy.subtype(c, b)

    def test_incomparable_fails_even_with_common_descendant(self):
        # diamond: d is below both b and c, but b and c stay incomparable
        h = TypeHierarchy("top", {"top": [], "b": ["top"], "c": ["top"], "d": ["b", "c"]})
        assert h.unify("b", "c") is None
        assert h.unify("b", "d") == "d"


class TestAdd:
    def test_add_then_reaches_root(self, hierarchy):
        h2 = hierarchy.add("perry", ["liquid"])
        assert h2.subtype("perry", "top")
        assert "perry" not in hierarchy  # original untouched

    def test_duplicate(self, hierarchy):
        with pytest.raises(DuplicateType):
            hierarchy.add("liquid", ["top"])

    def test_empty_parents(self, hierarchy):
        with pytest.raises(UnknownType):
            hierarchy.add("x", [])

    def test_unknown_parent(self, hierarchy):
        with pytest.raises(UnknownType):
            hierarchy.add("x", ["nope"])


class TestConstruction:
    def test_cycle_rejected(self):
        with pytest.raises(UnknownType):
            TypeHierarchy("top", {"top": [], "a": ["b"], "b": ["a"]})

    def test_orphan_rejected(self):
        with pytest.raises(UnknownType):
            TypeHierarchy("top", {"top": [], "a": []})

    def test_topological_order(self, hierarchy):
        order = hierarchy.topological_order()
        assert order[0] == "top"
        seen = set()
        for name in order:
            assert hierarchy.parents(name) <= seen or name == "top"
            seen.add(name)
