"""Command-line front door: demo, serve, get, export, import."""

from __future__ import annotations

import sys
from contextlib import contextmanager
from pathlib import Path

import click

from . import seed
from .client import Connection, LocalConnection, connect, pretty_print
from .config import BadConfig, ServerConfig, load_config
from .errors import GlexError
from .store import LexiconStore


@contextmanager
def _open_source(lexicon: str | None, server: str | None):
    """A Connection from --lexicon FILE / --server URL; bundled seed otherwise."""
    if lexicon and server:
        raise click.UsageError("--lexicon and --server are mutually exclusive")
    if server:
        conn = connect(server)
    elif lexicon:
        conn = connect(lexicon)
    else:
        conn = _SeedConnection()
    try:
        yield conn
    finally:
        conn.close()


class _SeedConnection(LocalConnection):
    def __init__(self):
        self._path = None
        self._store = LexiconStore(seed.load_seed())


def _fail(exc: GlexError) -> "click.exceptions.Exit":
    click.echo(str(exc), err=True)
    return SystemExit(1)


source_options = [
    click.option("--lexicon", type=click.Path(), help="Read from a local .ldif/.xml file."),
    click.option("--server", help="Read from a running server, e.g. http://127.0.0.1:8632."),
]


def _with_source(f):
    for opt in reversed(source_options):
        f = opt(f)
    return f


@click.group()
def main():
    """Generative lexicon toolkit: query entries, serve the lexicon, and
    validate anaphoric reference to compound modifiers."""


@main.command()
@click.argument("head")
@click.argument("modifier")
@click.argument("template")
@click.option(
    "--possessor-number",
    type=click.Choice(["sg", "pl"]),
    default="sg",
    show_default=True,
    help="Number of the possessor for the possessive variant.",
)
@_with_source
def demo(head, modifier, template, possessor_number, lexicon, server):
    """Print the three anaphora variants for HEAD MODIFIER under TEMPLATE.

    TEMPLATE must contain exactly three %s slots: head surface form,
    determiner, modifier surface form. Invalid variants are starred.
    """
    try:
        with _open_source(lexicon, server) as conn:
            verdict = conn.validate_anaphora(
                head, modifier, template, possessor_number=possessor_number
            )
    except GlexError as exc:
        raise _fail(exc)
    for variant in verdict.variants:
        click.echo(variant.sentence)


@main.command()
@click.argument("word")
@click.option("--path", "feature_path", help="Print values at this feature path only.")
@_with_source
def get(word, feature_path, lexicon, server):
    """Pretty-print the entry for WORD, or the values at --path."""
    try:
        with _open_source(lexicon, server) as conn:
            keys = conn.search_word(word)
            if not keys:
                click.echo(f"no entry for {word!r}", err=True)
                raise SystemExit(1)
            for key in keys:
                entry = conn.get_features(key)
                if feature_path:
                    for value in conn.get_feature_value(key, feature_path):
                        click.echo(value)
                else:
                    click.echo(pretty_print(entry), nl=False)
    except GlexError as exc:
        raise _fail(exc)


@main.command()
@click.argument("file", type=click.Path())
@click.option("--format", "format_", type=click.Choice(["ldif", "xml"]), default="ldif", show_default=True)
@_with_source
def export(file, format_, lexicon, server):
    """Save the lexicon to FILE."""
    try:
        with _open_source(lexicon, server) as conn:
            conn.save_lexicon(format_, file)
    except GlexError as exc:
        raise _fail(exc)


@main.command(name="import")
@click.argument("file", type=click.Path(exists=True))
@click.option("--format", "format_", type=click.Choice(["ldif", "xml"]), default="ldif", show_default=True)
@click.option("--credentials", help="USERNAME:PASSWORD for editor access to a server.")
@_with_source
def import_(file, format_, credentials, lexicon, server):
    """Restore the lexicon from FILE and print entry/type counts.

    With --lexicon TARGET the document is validated and written to TARGET
    in canonical LDIF; with --server it replaces the server's lexicon.
    """
    try:
        if server:
            creds = tuple(credentials.split(":", 1)) if credentials else None
            conn = connect(server, creds)
        elif lexicon:
            conn = _SeedConnection()
        else:
            raise click.UsageError("import needs --lexicon TARGET or --server URL")
        try:
            conn.restore_lexicon(format_, file)
            if server:
                doc = conn.export_document("ldif")
                from .ldif import import_ldif

                result = import_ldif(doc)
            else:
                result = conn.lexicon
                Path(lexicon).write_text(conn.export_document("ldif"), encoding="utf-8")
            click.echo(f"{len(result.entries)} entries, {len(result.hierarchy.nodes)} types")
        finally:
            conn.close()
    except GlexError as exc:
        raise _fail(exc)


@main.command()
@click.option("--config", "config_path", type=click.Path(), help="TOML config file.")
def serve(config_path):
    """Run the lexicon service (default 127.0.0.1:8632, bundled seed)."""
    import uvicorn

    from .server import create_app

    try:
        config = load_config(config_path) if config_path else ServerConfig()
    except BadConfig as exc:
        raise click.UsageError(str(exc))
    if config.lexicon_path:
        try:
            source = LocalConnection(config.lexicon_path)
        except GlexError as exc:
            raise click.UsageError(str(exc))
        store = LexiconStore(
            source.lexicon, path=config.lexicon_path, containment=config.containment_predicates
        )
    else:
        store = LexiconStore(seed.load_seed(), containment=config.containment_predicates)
    app = create_app(store, config)
    uvicorn.run(app, host=config.host, port=config.port, log_level="warning")


if __name__ == "__main__":
    main()
