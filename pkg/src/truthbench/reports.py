"""Report values and their two renderings.

Every report is a dataclass registered under a type tag.  The machine form is
a JSON document that :func:`parse_report` turns back into an equal value; the
text form is produced by each report's ``render_text``.
"""
from __future__ import annotations

import dataclasses
import json
import typing

_REGISTRY: dict = {}


def report_type(cls):
    _REGISTRY[cls.__name__] = cls
    return cls


def to_plain(value):
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        out = {"type": type(value).__name__} if type(value).__name__ in _REGISTRY else {}
        for f in dataclasses.fields(value):
            out[f.name] = to_plain(getattr(value, f.name))
        return out
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, int) and not isinstance(value, bool) and abs(value) >= 1 << 53:
        # JSON readers commonly lose precision above 2**53
        return {"bigint": str(value)}
    return value


def _from_plain(tp, data):
    origin = typing.get_origin(tp)
    if data is None:
        return None
    if isinstance(data, dict) and set(data) == {"bigint"}:
        return int(data["bigint"])
    if isinstance(data, dict) and data.get("type") in _REGISTRY:
        return _build(_REGISTRY[data["type"]], data)
    if tp in (list, tuple, typing.Any) and isinstance(data, list):
        items = [_from_plain(typing.Any, d) for d in data]
        return tuple(items) if tp is tuple else items
    if tp in (dict, typing.Any) and isinstance(data, dict):
        return {k: _from_plain(typing.Any, v) for k, v in data.items()}
    if origin is typing.Union:
        args = [a for a in typing.get_args(tp) if a is not type(None)]
        return _from_plain(args[0], data) if len(args) == 1 else data
    if origin in (list, tuple):
        (inner, *_) = typing.get_args(tp) or (typing.Any,)
        items = [_from_plain(inner, d) for d in data]
        return items if origin is list else tuple(items)
    if origin is dict:
        _, inner = typing.get_args(tp)
        return {k: _from_plain(inner, v) for k, v in data.items()}
    if dataclasses.is_dataclass(tp):
        return _build(tp, data)
    return data


def _build(cls, data):
    hints = typing.get_type_hints(cls)
    kwargs = {}
    for f in dataclasses.fields(cls):
        if f.name in data:
            kwargs[f.name] = _from_plain(hints[f.name], data[f.name])
    return cls(**kwargs)


def render_machine(report) -> str:
    return json.dumps(to_plain(report), sort_keys=True, indent=2, ensure_ascii=False)


def parse_report(text: str):
    data = json.loads(text)
    cls = _REGISTRY.get(data.get("type"))
    if cls is None:
        raise ValueError(f"unknown report type {data.get('type')!r}")
    return _build(cls, data)


def render_report(report) -> tuple:
    """``(text, machine_json)`` from a single report value."""
    return report.render_text(), render_machine(report)


def table(rows, headers) -> str:
    rows = [[str(c) for c in r] for r in rows]
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(headers)]
    line = "  ".join(h.ljust(w) for h, w in zip(headers, widths))
    out = [line, "  ".join("-" * w for w in widths)]
    out += ["  ".join(c.ljust(w) for c, w in zip(r, widths)) for r in rows]
    return "\n".join(out)
