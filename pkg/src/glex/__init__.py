"""Generative lexicon toolkit: typed lexical entries with qualia structure,
LDIF/XML persistence, a directory-style HTTP service, and a licensing engine
for anaphoric reference to French compound modifiers.
"""

from .anaphora import (
    AgreementFeatures,
    AnaphoraVerdict,
    DeterminerKind,
    RelationCategory,
    Variant,
    analyze_surface,
    detect_relation,
    generate_variants,
    licensing,
    realize_determiner,
)
from .client import Connection, LocalConnection, RemoteConnection, connect, pretty_print
from .entry import (
    LexicalEntry,
    QualiaStructure,
    ValidationReport,
    feature_at_path,
    validate_entry,
)
from .hierarchy import TypeHierarchy
from .ldif import export_ldif, import_ldif
from .lexicon import Lexicon
from .predicate import Predicate, TypedArg, parse_predicate, render_predicate
from .seed import load_seed
from .xmlfmt import export_xml, import_xml

__all__ = [
    "AgreementFeatures",
    "AnaphoraVerdict",
    "Connection",
    "DeterminerKind",
    "LexicalEntry",
    "Lexicon",
    "LocalConnection",
    "Predicate",
    "QualiaStructure",
    "RelationCategory",
    "RemoteConnection",
    "TypeHierarchy",
    "TypedArg",
    "ValidationReport",
    "Variant",
    "analyze_surface",
    "connect",
    "detect_relation",
    "export_ldif",
    "export_xml",
    "feature_at_path",
    "generate_variants",
    "import_ldif",
    "import_xml",
    "licensing",
    "load_seed",
    "parse_predicate",
    "pretty_print",
    "realize_determiner",
    "render_predicate",
    "validate_entry",
]

__version__ = "0.1.0"
