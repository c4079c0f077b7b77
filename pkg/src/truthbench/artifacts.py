"""Versioned JSON artifacts with a content digest.

An artifact is ``{"format", "version", "kind", "payload", "digest"}`` where the
digest is the SHA-256 of the canonical (sorted, compact) payload encoding.
"""
from __future__ import annotations

import hashlib
import json
from pathlib import Path

from .errors import ArtifactError, VersionMismatch

FORMAT = "truthbench"
VERSION = 1
KINDS = ("tower", "proof", "theory", "battery", "report")


def canonical(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def digest(payload) -> str:
    return hashlib.sha256(canonical(payload).encode("utf-8")).hexdigest()


def envelope(kind: str, payload) -> dict:
    if kind not in KINDS:
        raise ArtifactError(f"unknown artifact kind {kind!r}")
    return {"format": FORMAT, "version": VERSION, "kind": kind, "payload": payload, "digest": digest(payload)}


def dumps(kind: str, payload) -> str:
    return json.dumps(envelope(kind, payload), sort_keys=True, indent=1, ensure_ascii=False)


def loads(text: str, kind: str | None = None):
    """Payload of an artifact, after format, version, kind and digest checks."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ArtifactError(f"artifact is not JSON: {exc}") from None
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise ArtifactError("not a truthbench artifact")
    if doc.get("version") != VERSION:
        raise VersionMismatch(f"artifact version {doc.get('version')!r}, this build reads version {VERSION}")
    if kind is not None and doc.get("kind") != kind:
        raise ArtifactError(f"expected a {kind} artifact, found {doc.get('kind')!r}")
    if "payload" not in doc or doc.get("digest") != digest(doc["payload"]):
        raise ArtifactError("artifact digest does not match its payload")
    return doc["payload"]


def write(path, kind: str, payload):
    Path(path).write_text(dumps(kind, payload) + "\n", encoding="utf-8")


def read(path, kind: str | None = None):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ArtifactError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text, kind)
