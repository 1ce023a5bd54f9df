import sys
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"

# Stub scorers used by both the protocol unit tests and the acceptance
# suite.  Each is a self-contained script launched via sys.executable.
ECHO_ADAPTER = """\
import json, sys
print(json.dumps({"protocol": "poemotion-scorer", "version": 1}), flush=True)
for line in sys.stdin:
    req = json.loads(line)
    print(json.dumps({"id": req["id"], "valence": 0.0, "arousal": 0.0}), flush=True)
"""

OUT_OF_RANGE_ADAPTER = """\
import json, sys
print(json.dumps({"protocol": "poemotion-scorer", "version": 1}), flush=True)
for line in sys.stdin:
    req = json.loads(line)
    print(json.dumps({"id": req["id"], "valence": 1.2, "arousal": 0.0}), flush=True)
"""


def make_adapter(tmp_path: Path, body: str, name: str = "adapter.py") -> str:
    script = tmp_path / name
    script.write_text(body, encoding="utf-8")
    return f"{sys.executable} {script}"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def small_db(tmp_path_factory):
    """A compact stroke database shared by read-only tests."""
    from poemotion.strokedb import build_database

    out = tmp_path_factory.mktemp("strokedb")
    index = build_database(per_quadrant=8, db_seed=42, out_dir=out)
    return out, index
