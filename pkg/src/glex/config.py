"""Server configuration (TOML) and credential hashing."""

from __future__ import annotations

import hashlib
import hmac
import os
import secrets
from dataclasses import dataclass, field
from pathlib import Path

import tomli

from .entry import DEFAULT_CONTAINMENT
from .errors import GlexError

_PBKDF2_ROUNDS = 100_000


class BadConfig(GlexError):
    """Config file missing, malformed, or with bad field values."""


def hash_password(password: str, salt: str | None = None) -> str:
    """`pbkdf2-sha256$<salt>$<hex>`; salt is random when not given."""
    if salt is None:
        salt = secrets.token_hex(8)
    digest = hashlib.pbkdf2_hmac(
        "sha256", password.encode("utf-8"), salt.encode("ascii"), _PBKDF2_ROUNDS
    ).hex()
    return f"pbkdf2-sha256${salt}${digest}"


def check_password(password: str, password_hash: str) -> bool:
    try:
        scheme, salt, digest = password_hash.split("$")
    except ValueError:
        return False
    if scheme != "pbkdf2-sha256":
        return False
    candidate = hash_password(password, salt).split("$")[2]
    return hmac.compare_digest(candidate, digest)


@dataclass(frozen=True)
class User:
    username: str
    password_hash: str
    role: str  # reader | editor


@dataclass(frozen=True)
class ServerConfig:
    listen: str = "127.0.0.1:8632"
    users: tuple[User, ...] = ()
    auth_required: bool = False
    containment_predicates: frozenset[str] = DEFAULT_CONTAINMENT
    lexicon_path: str | None = None
    session_ttl: int = 3600
    ui_dir: str | None = None

    @property
    def host(self) -> str:
        return self.listen.rsplit(":", 1)[0]

    @property
    def port(self) -> int:
        return int(self.listen.rsplit(":", 1)[1])

    def user(self, username: str) -> User | None:
        for u in self.users:
            if u.username == username:
                return u
        return None


def load_config(path: str | os.PathLike) -> ServerConfig:
    try:
        raw = tomli.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise BadConfig(f"cannot read config: {exc}")
    except tomli.TOMLDecodeError as exc:
        raise BadConfig(f"bad TOML: {exc}")
    return parse_config(raw)


def parse_config(raw: dict) -> ServerConfig:
    known = {
        "listen",
        "users",
        "auth_required",
        "containment_predicates",
        "lexicon_path",
        "session_ttl",
        "ui_dir",
    }
    unknown = set(raw) - known
    if unknown:
        raise BadConfig(f"unknown config keys: {sorted(unknown)}")
    users = []
    seen = set()
    for u in raw.get("users", []):
        username = u.get("username")
        if not username:
            raise BadConfig("user without username")
        if username in seen:
            raise BadConfig(f"duplicate username {username!r}")
        seen.add(username)
        role = u.get("role", "reader")
        if role not in ("reader", "editor"):
            raise BadConfig(f"bad role {role!r} for {username!r}")
        if "password_hash" in u:
            password_hash = u["password_hash"]
        elif "password" in u:
            password_hash = hash_password(u["password"])
        else:
            raise BadConfig(f"user {username!r} needs password or password_hash")
        users.append(User(username, password_hash, role))
    ttl = raw.get("session_ttl", 3600)
    if not isinstance(ttl, int) or ttl <= 0:
        raise BadConfig(f"session_ttl must be a positive integer, got {ttl!r}")
    listen = raw.get("listen", "127.0.0.1:8632")
    if ":" not in listen:
        raise BadConfig(f"listen must be host:port, got {listen!r}")
    return ServerConfig(
        listen=listen,
        users=tuple(users),
        auth_required=bool(raw.get("auth_required", False)),
        containment_predicates=frozenset(
            raw.get("containment_predicates", DEFAULT_CONTAINMENT)
        ),
        lexicon_path=raw.get("lexicon_path"),
        session_ttl=ttl,
        ui_dir=raw.get("ui_dir"),
    )
