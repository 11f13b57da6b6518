"""JSON encoding of analysis reports.

Complex numbers are written as {"re": float, "im": float} and the point at
infinity as the string "inf". ``dump_report(load_report(text)) == text`` for
any text produced by ``dump_report``.
"""

from __future__ import annotations

import json
import math
from numbers import Integral, Real

import numpy as np

from .algebra import Poly, RationalFn, TPoly

SCHEMA_VERSION = 1


def encode(obj):
    """Plain JSON-ready structure: complex -> {"re", "im"}, tuples -> lists."""
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, Integral):
        return int(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return {"re": _finite(obj.real), "im": _finite(obj.imag)}
    if isinstance(obj, Real):
        return _finite(float(obj))
    if isinstance(obj, Poly):
        return list(obj.c)
    if isinstance(obj, RationalFn):
        return {"num": list(obj.num.c), "den": list(obj.den.c)}
    if isinstance(obj, TPoly):
        return [encode(c) for c in obj.coeffs]
    return obj


def _finite(x: float):
    x = float(x)
    return x if math.isfinite(x) else None


def decode(obj):
    if isinstance(obj, dict):
        if set(obj) == {"re", "im"} and None not in obj.values():
            return complex(obj["re"], obj["im"])
        return {k: decode(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [decode(v) for v in obj]
    return obj


def dump_report(report: dict) -> str:
    return json.dumps(encode(report), indent=2, sort_keys=True, ensure_ascii=False,
                      allow_nan=False) + "\n"


def load_report(text: str) -> dict:
    return decode(json.loads(text))
