import socket
import threading
import time
from pathlib import Path

import pytest
import uvicorn

from glex.config import ServerConfig, User, hash_password
from glex.seed import load_seed
from glex.server import create_app
from glex.store import LexiconStore

REPO_ROOT = Path(__file__).resolve().parent.parent
SEED_PATH = REPO_ROOT / "data" / "seed.ldif"
GOLDEN_PRETTY = REPO_ROOT / "data" / "golden" / "pressoir_pretty.txt"


@pytest.fixture(scope="session")
def seed_lexicon():
    return load_seed()


@pytest.fixture(scope="session")
def hierarchy(seed_lexicon):
    return seed_lexicon.hierarchy


def make_config(**overrides) -> ServerConfig:
    defaults = dict(
        users=(
            User("alice", hash_password("edit-pass"), "editor"),
            User("bob", hash_password("read-pass"), "reader"),
        ),
        auth_required=False,
    )
    defaults.update(overrides)
    return ServerConfig(**defaults)


class LiveServer:
    """uvicorn in a background thread, for remote-mode tests."""

    def __init__(self, store: LexiconStore, config: ServerConfig):
        self.store = store
        self.config = config
        self.port = _free_port()
        self.url = f"http://127.0.0.1:{self.port}"
        app = create_app(store, config)
        self._server = uvicorn.Server(
            uvicorn.Config(app, host="127.0.0.1", port=self.port, log_level="error")
        )
        self._thread = threading.Thread(target=self._server.run, daemon=True)

    def start(self):
        self._thread.start()
        deadline = time.time() + 10
        while not self._server.started:
            if time.time() > deadline:
                raise RuntimeError("server did not start")
            time.sleep(0.02)
        return self

    def stop(self):
        self._server.should_exit = True
        self._thread.join(timeout=10)


def _free_port() -> int:
    with socket.socket() as s:
        s.bind(("127.0.0.1", 0))
        return s.getsockname()[1]


@pytest.fixture()
def live_server():
    server = LiveServer(LexiconStore(load_seed()), make_config()).start()
    yield server
    server.stop()
