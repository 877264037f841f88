"""Compound anaphora licensing: relation detection, determiner realization,
and three-variant sentence generation for French endocentric compounds.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .entry import DEFAULT_CONTAINMENT, LexicalEntry
from .errors import BadTemplate, NoRelation, UnknownWord
from .hierarchy import TypeHierarchy
from .lexicon import Lexicon
from .predicate import Predicate


class RelationCategory(enum.Enum):
    CONTAIN_STATE = "ContainState"
    PART_OF = "PartOf"
    TELIC_TRIGGER = "TelicTrigger"
    TELIC_RESULT = "TelicResult"
    AGENTIVE = "Agentive"


class DeterminerKind(enum.Enum):
    DEFINITE = "definite"
    POSSESSIVE = "possessive"
    DEMONSTRATIVE = "demonstrative"


# Which anaphoric determiners each head/modifier relation licenses.
# Demonstrative reference is out for every relation category.
LICENSING: dict[RelationCategory, dict[DeterminerKind, bool]] = {
    RelationCategory.CONTAIN_STATE: {
        DeterminerKind.DEFINITE: True,
        DeterminerKind.POSSESSIVE: False,
        DeterminerKind.DEMONSTRATIVE: False,
    },
    RelationCategory.PART_OF: {
        DeterminerKind.DEFINITE: True,
        DeterminerKind.POSSESSIVE: True,
        DeterminerKind.DEMONSTRATIVE: False,
    },
    RelationCategory.TELIC_TRIGGER: {
        DeterminerKind.DEFINITE: True,
        DeterminerKind.POSSESSIVE: False,
        DeterminerKind.DEMONSTRATIVE: False,
    },
    RelationCategory.TELIC_RESULT: {
        DeterminerKind.DEFINITE: True,
        DeterminerKind.POSSESSIVE: True,
        DeterminerKind.DEMONSTRATIVE: False,
    },
    RelationCategory.AGENTIVE: {
        DeterminerKind.DEFINITE: True,
        DeterminerKind.POSSESSIVE: False,
        DeterminerKind.DEMONSTRATIVE: False,
    },
}


def licensing(category: RelationCategory) -> dict[DeterminerKind, bool]:
    return dict(LICENSING[category])


@dataclass(frozen=True)
class AgreementFeatures:
    gender: str  # m | f
    number: str  # sg | pl
    elision: bool = False
    possessor_number: str = "sg"  # sg | pl


@dataclass(frozen=True)
class Variant:
    kind: DeterminerKind
    sentence: str
    valid: bool


@dataclass(frozen=True)
class AnaphoraVerdict:
    category: RelationCategory
    licensing: dict[DeterminerKind, bool]
    variants: tuple[Variant, ...]
    diagnostics: tuple[str, ...] = ()


def _slot_matches(h: TypeHierarchy, slot_type: str, modifier_type: str) -> bool:
    return h.unify(slot_type, modifier_type) is not None


def _probe_all(
    head: LexicalEntry,
    modifier: LexicalEntry,
    h: TypeHierarchy,
    containment: frozenset[str] = DEFAULT_CONTAINMENT,
):
    """All matching relation categories in probe order, plus failure reasons."""
    mod_type = modifier.lexical_type
    q = head.qualia
    matches: list[RelationCategory] = []
    reasons: list[str] = []

    def probe(category, pred: Predicate | None, pick, label: str):
        if pred is None:
            reasons.append(f"{label}: role absent")
            return
        slot = pick(pred)
        if slot is None:
            reasons.append(f"{label}: no argument at the probed position")
        elif _slot_matches(h, slot.type, mod_type):
            matches.append(category)
        else:
            reasons.append(
                f"{label}: {slot.type!r} does not unify with {mod_type!r}"
            )

    def nth(pred, i):
        ind = pred.individual_args
        return ind[i] if len(ind) > i else None

    state = q.telic_state if q.telic_state and q.telic_state.name in containment else None
    probe(
        RelationCategory.CONTAIN_STATE,
        state,
        lambda p: p.individual_args[-1] if p.individual_args else None,
        "contain state",
    )

    if q.const:
        matched = False
        for p in q.const:
            slot = nth(p, 0)
            if slot is not None and _slot_matches(h, slot.type, mod_type):
                matched = True
                break
        if matched:
            matches.append(RelationCategory.PART_OF)
        else:
            reasons.append(f"part_of: no constitutive slot unifies with {mod_type!r}")
    else:
        reasons.append("part_of: role absent")

    probe(RelationCategory.TELIC_TRIGGER, q.telic_trigger, lambda p: nth(p, 1), "telic trigger")
    probe(RelationCategory.TELIC_RESULT, q.telic_result, lambda p: nth(p, 0), "telic result")

    if q.agentive is None:
        reasons.append("agentive: role absent")
    else:
        candidates = [
            a for a in q.agentive.individual_args if a.var != head.distinguished_var
        ]
        if any(_slot_matches(h, a.type, mod_type) for a in candidates):
            matches.append(RelationCategory.AGENTIVE)
        else:
            reasons.append(f"agentive: no slot unifies with {mod_type!r}")

    return matches, reasons


def detect_relation(
    head: LexicalEntry,
    modifier: LexicalEntry,
    h: TypeHierarchy,
    containment: frozenset[str] = DEFAULT_CONTAINMENT,
) -> RelationCategory:
    """First matching category in fixed probe order; NoRelation with reasons."""
    matches, reasons = _probe_all(head, modifier, h, containment)
    if not matches:
        raise NoRelation(reasons)
    return matches[0]


def analyze_surface(surface: str, lexicon: Lexicon) -> tuple[LexicalEntry, str]:
    """Resolve a surface form to (entry, number): exact lemma is singular,
    lemma + one trailing s/x is plural.
    """
    if not surface:
        raise UnknownWord("empty surface form")
    keys = lexicon.keys_for_lemma(surface)
    if keys:
        return lexicon.entries[keys[0]], "sg"
    if surface[-1] in ("s", "x"):
        stem = surface[:-1]
        keys = lexicon.keys_for_lemma(stem)
        if keys:
            return lexicon.entries[keys[0]], "pl"
        raise UnknownWord(f"no entry for {surface!r} or {stem!r}")
    raise UnknownWord(f"no entry for {surface!r}")


def realize_determiner(kind: DeterminerKind, f: AgreementFeatures) -> str:
    """Standard French determiner paradigm with elision handling."""
    if kind is DeterminerKind.DEFINITE:
        if f.number == "pl":
            return "les"
        if f.elision:
            return "l'"
        return "le" if f.gender == "m" else "la"
    if kind is DeterminerKind.POSSESSIVE:
        if f.possessor_number == "pl":
            return "leurs" if f.number == "pl" else "leur"
        if f.number == "pl":
            return "ses"
        if f.gender == "m" or f.elision:
            return "son"
        return "sa"
    # demonstrative
    if f.number == "pl":
        return "ces"
    if f.gender == "f":
        return "cette"
    return "cet" if f.elision else "ce"


_VARIANT_ORDER = (
    DeterminerKind.DEFINITE,
    DeterminerKind.POSSESSIVE,
    DeterminerKind.DEMONSTRATIVE,
)


def _fill_template(parts: list[str], head: str, det: str, modifier: str) -> str:
    before = parts[0] + head + parts[1]
    if not before:
        det = det[0].upper() + det[1:]
    between = parts[2]
    if det.endswith("'") and between.startswith(" "):
        between = between[1:]
    return before + det + between + modifier + parts[3]


def generate_variants(
    head_surface: str,
    modifier_surface: str,
    template: str,
    lexicon: Lexicon,
    possessor_number: str = "sg",
    containment: frozenset[str] = DEFAULT_CONTAINMENT,
) -> AnaphoraVerdict:
    """Fig-5-style output: the three determiner variants, invalid ones starred."""
    parts = template.split("%s")
    if len(parts) != 4:
        raise BadTemplate(f"template needs exactly three %s slots, got {len(parts) - 1}")
    head, _ = analyze_surface(head_surface, lexicon)
    modifier, number = analyze_surface(modifier_surface, lexicon)
    matches, reasons = _probe_all(head, modifier, lexicon.hierarchy, containment)
    if not matches:
        raise NoRelation(reasons)
    category = matches[0]
    diagnostics = tuple(
        f"ambiguous: also matches {m.value}" for m in matches[1:]
    )
    table = licensing(category)
    features = AgreementFeatures(
        gender=modifier.gender,
        number=number,
        elision=modifier.elision,
        possessor_number=possessor_number,
    )
    variants = []
    for kind in _VARIANT_ORDER:
        det = realize_determiner(kind, features)
        sentence = _fill_template(parts, head_surface, det, modifier_surface)
        valid = table[kind]
        if not valid:
            sentence = "* " + sentence
        variants.append(Variant(kind, sentence, valid))
    return AnaphoraVerdict(category, table, tuple(variants), diagnostics)
