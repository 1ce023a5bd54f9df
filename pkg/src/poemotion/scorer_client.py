"""Client side of the line-delimited external scorer protocol.

The scorer runs as a child process.  It announces itself with a handshake
line, then answers exactly one JSON response per request, in request
order, over stdout.  Closing its stdin tells it to exit.  The client
enforces the handshake, id agreement, the [-1, 1] value range, and a
per-response timeout.
"""

from __future__ import annotations

import json
import queue
import shlex
import subprocess
import threading
from typing import Sequence

from .conllu import SemanticSegment
from .errors import LaunchError, ProtocolError, ScorerTimeoutError

PROTOCOL_NAME = "poemotion-scorer"
PROTOCOL_VERSION = 1

_EOF = object()


class _LineReader:
    """Reads child stdout on a daemon thread so reads can time out."""

    def __init__(self, stream):
        self._queue: queue.Queue = queue.Queue()
        self._thread = threading.Thread(target=self._pump, args=(stream,), daemon=True)
        self._thread.start()

    def _pump(self, stream) -> None:
        try:
            for line in stream:
                self._queue.put(line)
        finally:
            self._queue.put(_EOF)

    def readline(self, timeout_s: float) -> str | None:
        """Next line, or None on EOF; raises ScorerTimeoutError."""
        try:
            item = self._queue.get(timeout=timeout_s)
        except queue.Empty:
            raise ScorerTimeoutError(
                f"scorer produced no output within {timeout_s}s"
            ) from None
        return None if item is _EOF else item


def _parse_json_line(line: str) -> dict:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise ProtocolError(f"malformed JSON line {line.rstrip()!r}: {exc}") from None
    if not isinstance(obj, dict):
        raise ProtocolError(f"expected a JSON object, got {line.rstrip()!r}")
    return obj


def _check_handshake(line: str | None) -> None:
    if line is None:
        raise ProtocolError("scorer closed its output before the handshake")
    obj = _parse_json_line(line)
    if obj.get("protocol") != PROTOCOL_NAME or obj.get("version") != PROTOCOL_VERSION:
        raise ProtocolError(f"unexpected handshake {obj!r}")


def _parse_response(line: str | None, expected_id: int) -> tuple[float, float]:
    if line is None:
        raise ProtocolError(f"scorer closed its output before answering id {expected_id}")
    obj = _parse_json_line(line)
    if obj.get("id") != expected_id:
        raise ProtocolError(f"response id {obj.get('id')!r}, expected {expected_id}")
    if "error" in obj:
        raise ProtocolError(f"scorer failed on id {expected_id}: {obj['error']}")
    try:
        valence = float(obj["valence"])
        arousal = float(obj["arousal"])
    except (KeyError, TypeError, ValueError):
        raise ProtocolError(f"response for id {expected_id} lacks numeric scores") from None
    if not (-1.0 <= valence <= 1.0) or not (-1.0 <= arousal <= 1.0):
        raise ProtocolError(
            f"response for id {expected_id} outside [-1, 1]: ({valence}, {arousal})"
        )
    return (valence, arousal)


def score_segments_external(
    segments: Sequence[SemanticSegment],
    scorer_command: str,
    timeout_s: float = 30.0,
) -> list[tuple[float, float]]:
    """Score every segment through the external scorer, in order."""
    argv = shlex.split(scorer_command)
    if not argv:
        raise LaunchError("empty scorer command")
    try:
        child = subprocess.Popen(
            argv,
            stdin=subprocess.PIPE,
            stdout=subprocess.PIPE,
            text=True,
            bufsize=1,
        )
    except OSError as exc:
        raise LaunchError(f"failed to launch scorer {argv[0]!r}: {exc}") from None

    reader = _LineReader(child.stdout)
    try:
        _check_handshake(reader.readline(timeout_s))
        results: list[tuple[float, float]] = []
        for req_id, segment in enumerate(segments):
            request = json.dumps({"id": req_id, "text": segment.text})
            try:
                child.stdin.write(request + "\n")
                child.stdin.flush()
            except (BrokenPipeError, OSError):
                raise ProtocolError("scorer closed its input mid-session") from None
            results.append(_parse_response(reader.readline(timeout_s), req_id))
        child.stdin.close()
        try:
            status = child.wait(timeout=timeout_s)
        except subprocess.TimeoutExpired:
            raise ScorerTimeoutError(
                f"scorer did not exit within {timeout_s}s of stream close"
            ) from None
        if status != 0:
            raise ProtocolError(f"scorer exited with status {status}")
        return results
    finally:
        if child.poll() is None:
            child.kill()
            child.wait()
