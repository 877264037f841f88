import random

import pytest

from glex.errors import DuplicateKey, ParseError, ValidationFailed
from glex.hierarchy import TypeHierarchy
from glex.ldif import export_ldif, import_ldif
from glex.lexicon import Lexicon
from glex.xmlfmt import export_xml, import_xml

from .conftest import SEED_PATH
from .genlex import random_lexicon


class TestLdifExport:
    def test_seed_contains_pinned_trigger_line(self, seed_lexicon):
        text = export_ldif(seed_lexicon)
        record = [r for r in text.split("\n\n") if r.startswith("dn: lemma=pressoir,sense=1")]
        assert len(record) == 1
        assert "telicTrigger: press(e1:process,x:human,y:fruit)" in record[0].split("\n")

    def test_empty_lexicon(self):
        lex = Lexicon(TypeHierarchy("top", {"top": []}), {})
        assert export_ldif(lex) == "dn: type=top\n"

    def test_deterministic(self, seed_lexicon):
        assert export_ldif(seed_lexicon) == export_ldif(seed_lexicon)

    def test_shipped_seed_is_canonical(self, seed_lexicon):
        assert export_ldif(seed_lexicon) == SEED_PATH.read_text(encoding="utf-8")

    def test_entries_sorted_by_lemma_bytes(self, seed_lexicon):
        text = export_ldif(seed_lexicon)
        lemmas = [
            line.split("lemma=")[1].split(",")[0]
            for line in text.splitlines()
            if line.startswith("dn: lemma=")
        ]
        assert lemmas == sorted(lemmas, key=lambda s: s.encode("utf-8"))


class TestLdifImport:
    def test_seed_counts(self, seed_lexicon):
        assert len(seed_lexicon.hierarchy.nodes) <= 30
        assert len(seed_lexicon.entries) >= 10

    def test_round_trip(self, seed_lexicon):
        assert import_ldif(export_ldif(seed_lexicon)) == seed_lexicon

    def test_bad_gender_is_parse_error(self, seed_lexicon):
        text = export_ldif(seed_lexicon).replace("gender: m", "gender: x", 1)
        with pytest.raises(ParseError):
            import_ldif(text)

    def test_duplicate_dn(self, seed_lexicon):
        text = export_ldif(seed_lexicon)
        record = text.split("\n\n")[-1].rstrip("\n")
        with pytest.raises(DuplicateKey):
            import_ldif(text.rstrip("\n") + "\n\n" + record + "\n")

    def test_unknown_attribute_rejected(self, seed_lexicon):
        text = export_ldif(seed_lexicon).replace("cat: N", "cat: N\ncolour: blue", 1)
        with pytest.raises(ParseError) as err:
            import_ldif(text)
        assert err.value.line > 0

    def test_unknown_type_fails_validation(self):
        text = (
            "dn: type=top\n\n"
            "dn: lemma=mot,sense=1\nentryClass: glEntry\nlemma: mot\nsense: 1\n"
            "cat: N\ngender: m\nelision: false\nlexicalType: widget\n"
        )
        with pytest.raises(ValidationFailed):
            import_ldif(text)

    def test_cycle_in_types(self):
        text = "dn: type=top\n\ndn: type=a\nparent: b\n\ndn: type=b\nparent: a\n"
        with pytest.raises(ValidationFailed):
            import_ldif(text)


class TestXml:
    def test_round_trip(self, seed_lexicon):
        assert import_xml(export_xml(seed_lexicon)) == seed_lexicon

    def test_codec_commutation(self, seed_lexicon):
        via_xml = import_xml(export_xml(seed_lexicon))
        assert export_ldif(via_xml) == export_ldif(seed_lexicon)

    def test_malformed_nesting(self):
        with pytest.raises(ParseError):
            import_xml("<lexicon><types></lexicon></types>")

    def test_unknown_element_rejected(self, seed_lexicon):
        text = export_xml(seed_lexicon).replace("<cat>N</cat>", "<colour>blue</colour>", 1)
        with pytest.raises(ParseError):
            import_xml(text)

    def test_diacritics_survive(self, seed_lexicon):
        text = export_xml(seed_lexicon)
        assert "défectueux" not in text  # sanity: only data below
        assert 'lemma="cidre"' in text
        assert import_xml(text).entries[("eau", 1)].lemma == "eau"


class TestRandomizedRoundTrips:
    def test_fifty_random_lexicons(self, hierarchy):
        rng = random.Random(20240817)
        for i in range(50):
            lex = random_lexicon(rng, hierarchy)
            ldif_text = export_ldif(lex)
            xml_text = export_xml(lex)
            from_ldif = import_ldif(ldif_text)
            from_xml = import_xml(xml_text)
            assert from_ldif == lex, f"ldif round trip broke at iteration {i}"
            assert from_xml == lex, f"xml round trip broke at iteration {i}"
            assert export_ldif(from_ldif) == ldif_text
            assert export_xml(from_xml) == xml_text
            assert from_ldif == from_xml
