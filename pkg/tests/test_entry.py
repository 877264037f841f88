import dataclasses

import pytest

from glex.entry import (
    LexicalEntry,
    QualiaStructure,
    feature_at_path,
    validate_entry,
)
from glex.errors import BadPath
from glex.predicate import TypedArg, parse_predicate


@pytest.fixture(scope="module")
def pressoir(seed_lexicon):
    return seed_lexicon.entries[("pressoir", 1)]


@pytest.fixture(scope="module")
def verre(seed_lexicon):
    return seed_lexicon.entries[("verre", 1)]


class TestFeatureAtPath:
    def test_telic_trigger(self, pressoir):
        assert feature_at_path(pressoir, "qualia.telic.trigger") == [
            "press(e1:process,x:human,y:fruit)"
        ]

    def test_gender(self, pressoir):
        assert feature_at_path(pressoir, "gender") == ["m"]

    def test_absent_role_is_empty_not_error(self, verre):
        assert feature_at_path(verre, "qualia.agentive") == []

    def test_unknown_path_raises(self, verre):
        with pytest.raises(BadPath):
            feature_at_path(verre, "qualia.telic.nonsense")
        with pytest.raises(BadPath):
            feature_at_path(verre, "colour")

    def test_scalar_paths(self, pressoir):
        assert feature_at_path(pressoir, "lemma") == ["pressoir"]
        assert feature_at_path(pressoir, "sense") == ["1"]
        assert feature_at_path(pressoir, "elision") == ["false"]
        assert feature_at_path(pressoir, "lexicalType") == ["press"]
        assert feature_at_path(pressoir, "entryClass") == ["glEntry"]
        assert feature_at_path(pressoir, "args") == ["z:press"]
        assert feature_at_path(pressoir, "events") == ["e1:process", "e2:process"]

    def test_const_can_be_multivalued(self, seed_lexicon):
        patin = seed_lexicon.entries[("patin", 1)]
        assert feature_at_path(patin, "qualia.const") == ["part_of(y:wheel,x:skate)"]

    def test_does_not_mutate(self, pressoir):
        before = dataclasses.asdict(pressoir)
        feature_at_path(pressoir, "qualia.telic.trigger")
        assert dataclasses.asdict(pressoir) == before


def minimal_entry(**overrides):
    fields = dict(lemma="mot", cat="N", gender="m", lexical_type="artifact")
    fields.update(overrides)
    return LexicalEntry(**fields)


class TestValidateEntry:
    def test_seed_entries_all_valid(self, seed_lexicon):
        for entry in seed_lexicon.entries.values():
            report = validate_entry(entry, seed_lexicon.hierarchy)
            assert report.ok, report.problems

    def test_unknown_lexical_type(self, hierarchy):
        report = validate_entry(minimal_entry(lexical_type="widget"), hierarchy)
        assert not report.ok
        assert any(path == "lexicalType" for _, path, _ in report.problems)

    def test_const_must_be_part_of(self, hierarchy):
        entry = minimal_entry(
            qualia=QualiaStructure(const=(parse_predicate("has(x:wheel)"),))
        )
        report = validate_entry(entry, hierarchy)
        assert any(path == "qualia.const[0]" for _, path, _ in report.problems)

    def test_telic_state_must_be_containment(self, hierarchy):
        entry = minimal_entry(
            qualia=QualiaStructure(telic_state=parse_predicate("hold(s1:state,y:liquid)"))
        )
        report = validate_entry(entry, hierarchy)
        assert any(path == "qualia.telic.state" for _, path, _ in report.problems)
        # configurable containment-predicate set
        ok = validate_entry(entry, hierarchy, containment=frozenset({"hold"}))
        assert ok.ok

    def test_bad_gender(self, hierarchy):
        report = validate_entry(minimal_entry(gender="x"), hierarchy)
        assert any(path == "gender" for _, path, _ in report.problems)

    def test_declared_variable_type_must_match(self, hierarchy):
        entry = minimal_entry(
            args=(TypedArg("x", "artifact"),),
            qualia=QualiaStructure(formal=parse_predicate("f(x:liquid)")),
        )
        report = validate_entry(entry, hierarchy)
        assert not report.ok

    def test_underspecified_reuse_is_fine(self, hierarchy):
        entry = minimal_entry(
            args=(TypedArg("x", "artifact"),),
            qualia=QualiaStructure(formal=parse_predicate("f(x)")),
        )
        assert validate_entry(entry, hierarchy).ok

    def test_event_slot_needs_event_variable(self, hierarchy):
        entry = minimal_entry(events=(TypedArg("x", "process"),))
        report = validate_entry(entry, hierarchy)
        assert any(path == "events[0]" for _, path, _ in report.problems)

    def test_ok_iff_no_problems(self, hierarchy):
        good = validate_entry(minimal_entry(), hierarchy)
        assert good.ok and good.problems == ()
        bad = validate_entry(minimal_entry(gender="x"), hierarchy)
        assert not bad.ok and bad.problems
