"""Deterministic flat JSON: fixed key order, floats at 17 significant digits."""

from __future__ import annotations

import json
import math
from enum import Enum


def format_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"non-finite value {x!r} cannot be serialised")
    s = format(x, ".17g")
    if not any(c in s for c in ".en"):
        s += ".0"
    return s


def _value(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Enum):
        v = v.value
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return format_float(v)
    if isinstance(v, str):
        return json.dumps(v)
    raise TypeError(f"unsupported value type {type(v).__name__}")


def dumps_flat(d: dict) -> str:
    """Serialise a flat mapping in insertion order; output ends with a newline."""
    body = ", ".join(f"{json.dumps(k)}: {_value(v)}" for k, v in d.items())
    return "{" + body + "}\n"
