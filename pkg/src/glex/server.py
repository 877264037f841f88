"""HTTP service over a LexiconStore: bind/search/fetch/modify plus
import/export and anaphora validation, with role-based access control.
"""

from __future__ import annotations

import secrets
import time
from contextlib import asynccontextmanager
from dataclasses import dataclass
from pathlib import Path

from fastapi import Depends, FastAPI, Header, Query, Request, Response
from fastapi.responses import JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles

from . import anaphora as ana
from .config import ServerConfig, check_password
from .entry import feature_at_path
from .errors import (
    AuthFailed,
    BadFilter,
    BadPath,
    BadTemplate,
    Conflict,
    DuplicateKey,
    Forbidden,
    GlexError,
    NoRelation,
    NotFound,
    ParseError,
    UnknownWord,
    ValidationFailed,
)
from .ldif import export_ldif, import_ldif
from .store import LexiconStore
from .wire import entry_from_json, entry_hash, entry_to_json, key_to_json, verdict_to_json
from .xmlfmt import export_xml, import_xml

_STATUS = {
    AuthFailed: 401,
    Forbidden: 403,
    NotFound: 404,
    Conflict: 409,
    BadFilter: 400,
    BadPath: 400,
    BadTemplate: 400,
    ParseError: 400,
    DuplicateKey: 400,
    UnknownWord: 422,
    NoRelation: 422,
    ValidationFailed: 422,
}


@dataclass
class Session:
    token: str
    username: str
    role: str
    expires: float


class SessionTable:
    def __init__(self, ttl: int):
        self._ttl = ttl
        self._sessions: dict[str, Session] = {}

    def create(self, username: str, role: str) -> Session:
        session = Session(
            token=secrets.token_hex(16),
            username=username,
            role=role,
            expires=time.time() + self._ttl,
        )
        self._sessions[session.token] = session
        return session

    def resolve(self, token: str) -> Session:
        session = self._sessions.get(token)
        if session is None:
            raise AuthFailed("unknown session token")
        if session.expires < time.time():
            del self._sessions[token]
            raise AuthFailed("session expired")
        return session


def create_app(store: LexiconStore, config: ServerConfig) -> FastAPI:
    @asynccontextmanager
    async def lifespan(app: FastAPI):
        yield
        store.flush()

    app = FastAPI(
        title="generative lexicon service", docs_url=None, redoc_url=None, lifespan=lifespan
    )
    sessions = SessionTable(config.session_ttl)

    def error_body(exc: GlexError) -> dict:
        body = {"error": type(exc).__name__, "detail": str(exc)}
        if isinstance(exc, ValidationFailed):
            body["problems"] = [
                {"key": {"lemma": k[0], "sense": k[1]}, "path": path, "message": msg}
                for k, path, msg in exc.report.problems
            ]
        if isinstance(exc, NoRelation):
            body["reasons"] = list(exc.reasons)
        return body

    @app.exception_handler(GlexError)
    async def handle_domain_error(request: Request, exc: GlexError):
        return JSONResponse(status_code=_STATUS.get(type(exc), 400), content=error_body(exc))

    def role_of(authorization: str | None = Header(default=None)) -> str:
        if authorization is None:
            if config.auth_required:
                raise AuthFailed("missing Authorization header")
            return "reader"
        scheme, _, token = authorization.partition(" ")
        if scheme.lower() != "bearer" or not token:
            raise AuthFailed("expected 'Authorization: Bearer <token>'")
        return sessions.resolve(token).role

    def require_editor(role: str = Depends(role_of)) -> str:
        if role != "editor":
            raise Forbidden("editor role required")
        return role

    @app.post("/session")
    async def bind(body: dict):
        username = body.get("username", "")
        password = body.get("password", "")
        user = config.user(username)
        # Constant-shape check: verify against a throwaway hash when the
        # user is unknown so timing does not leak usernames.
        dummy = "pbkdf2-sha256$00000000$" + "0" * 64
        ok = check_password(password, user.password_hash if user else dummy)
        if user is None or not ok:
            raise AuthFailed("bad credentials")
        session = sessions.create(user.username, user.role)
        return {"token": session.token, "expires": session.expires}

    @app.get("/entries")
    async def search(filter: str = Query(default=""), role: str = Depends(role_of)):
        keys = store.search(filter)
        return {"results": [key_to_json(k) for k in keys]}

    @app.get("/entries/{lemma}/{sense}")
    async def fetch(lemma: str, sense: int, role: str = Depends(role_of)):
        entry = store.fetch((lemma, sense))
        return JSONResponse(
            content=entry_to_json(entry), headers={"ETag": entry_hash(entry)}
        )

    @app.put("/entries/{lemma}/{sense}")
    async def upsert(
        lemma: str,
        sense: int,
        body: dict,
        role: str = Depends(require_editor),
        if_match: str | None = Header(default=None),
    ):
        entry = entry_from_json(body)
        if entry.key != (lemma, sense):
            raise ParseError("entry body does not match URL key")
        key = store.upsert(entry, expected_hash=if_match)
        return key_to_json(key)

    @app.delete("/entries/{lemma}/{sense}", status_code=204)
    async def remove(lemma: str, sense: int, role: str = Depends(require_editor)):
        store.remove((lemma, sense))
        return Response(status_code=204)

    @app.get("/entries/{lemma}/{sense}/features/{path}")
    async def features(lemma: str, sense: int, path: str, role: str = Depends(role_of)):
        entry = store.fetch((lemma, sense))
        return {"values": feature_at_path(entry, path)}

    @app.get("/lexicon/export")
    async def export(format: str = Query(default="ldif"), role: str = Depends(role_of)):
        lexicon = store.snapshot()
        if format == "ldif":
            return PlainTextResponse(export_ldif(lexicon), media_type="text/plain; charset=utf-8")
        if format == "xml":
            return PlainTextResponse(export_xml(lexicon), media_type="application/xml")
        raise BadFilter(f"unknown format {format!r}")

    @app.post("/lexicon/import")
    async def import_(request: Request, format: str = Query(default="ldif"), role: str = Depends(require_editor)):
        text = (await request.body()).decode("utf-8")
        if format == "ldif":
            lexicon = import_ldif(text)
        elif format == "xml":
            lexicon = import_xml(text)
        else:
            raise BadFilter(f"unknown format {format!r}")
        store.replace(lexicon)
        return {"entries": len(lexicon.entries), "types": len(lexicon.hierarchy.nodes)}

    @app.post("/anaphora/validate")
    async def validate_anaphora(body: dict, role: str = Depends(role_of)):
        for field in ("head", "modifier", "template"):
            if field not in body:
                raise BadTemplate(f"missing field {field!r}")
        possessor = body.get("possessor_number", "sg")
        if possessor not in ("sg", "pl"):
            raise BadTemplate(f"possessor_number must be sg or pl, got {possessor!r}")
        verdict = ana.generate_variants(
            body["head"],
            body["modifier"],
            body["template"],
            store.snapshot(),
            possessor_number=possessor,
            containment=store.containment,
        )
        return verdict_to_json(verdict)

    @app.get("/types")
    async def types(role: str = Depends(role_of)):
        h = store.snapshot().hierarchy
        return {
            "root": h.root,
            "nodes": {name: sorted(h.parents(name)) for name in h.topological_order()},
        }

    if config.ui_dir and Path(config.ui_dir).is_dir():
        app.mount("/ui", StaticFiles(directory=config.ui_dir, html=True), name="ui")

    return app
