"""Canonical JSON emission and complex-number codecs.

Reports must be byte-identical across runs of the same battery, so the
writer fixes everything the stdlib leaves open: keys sorted, floats at 17
significant digits (lossless for doubles), LF line endings, complex
numbers always as {"im": ..., "re": ...} objects.
"""

from __future__ import annotations

import json
import math

import numpy as np


def complex_to_json(z) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def json_to_complex(obj) -> complex:
    if isinstance(obj, dict) and set(obj) == {"re", "im"}:
        return complex(float(obj["re"]), float(obj["im"]))
    raise ValueError(f"not a complex-number object: {obj!r}")


def _format_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite float {x!r}")
    return format(x, ".17g")


def _write(obj, indent: int, pieces: list) -> None:
    pad = "  " * indent
    inner_pad = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            pieces.append("{}")
            return
        pieces.append("{\n")
        keys = sorted(obj)
        for i, key in enumerate(keys):
            if not isinstance(key, str):
                raise TypeError(f"JSON object keys must be strings, got {key!r}")
            pieces.append(f"{inner_pad}{json.dumps(key)}: ")
            _write(obj[key], indent + 1, pieces)
            pieces.append(",\n" if i < len(keys) - 1 else "\n")
        pieces.append(pad + "}")
    elif isinstance(obj, (list, tuple)):
        if len(obj) == 0:
            pieces.append("[]")
            return
        pieces.append("[\n")
        for i, item in enumerate(obj):
            pieces.append(inner_pad)
            _write(item, indent + 1, pieces)
            pieces.append(",\n" if i < len(obj) - 1 else "\n")
        pieces.append(pad + "]")
    elif isinstance(obj, bool) or isinstance(obj, np.bool_):
        pieces.append("true" if obj else "false")
    elif obj is None:
        pieces.append("null")
    elif isinstance(obj, (int, np.integer)):
        pieces.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        pieces.append(_format_float(float(obj)))
    elif isinstance(obj, (complex, np.complexfloating)):
        _write(complex_to_json(obj), indent, pieces)
    elif isinstance(obj, str):
        pieces.append(json.dumps(obj))
    elif isinstance(obj, np.ndarray):
        _write(obj.tolist(), indent, pieces)
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__} canonically")


def dumps_canonical(obj) -> str:
    """Deterministic JSON text: sorted keys, 17-digit floats, trailing LF."""
    pieces: list = []
    _write(obj, 0, pieces)
    pieces.append("\n")
    return "".join(pieces)


def write_canonical(path, obj) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_canonical(obj))
