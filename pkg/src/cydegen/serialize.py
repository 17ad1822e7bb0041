"""JSON-compatible encodings of the report types.

Rationals are written as ``"p/q"`` strings (``"p"`` for integers) so that
decoding gives back exactly the same values.
"""
from __future__ import annotations

import dataclasses
import json
from fractions import Fraction

from .invariants import BCOVReport
from .milnor import MilnorResult
from .ncd import AsymptoticReport
from .periodfit import FitResult

__all__ = ["fraction_to_str", "fraction_from_str", "to_dict", "from_dict", "dumps", "loads"]

_FRACTION_FIELDS = {
    AsymptoticReport: {"lct", "alpha", "rotation_number"},
    BCOVReport: {"alpha", "b_correction", "alpha_bcov", "loglog_coefficient"},
    MilnorResult: set(),
    FitResult: set(),
}
_KINDS = {cls.__name__: cls for cls in _FRACTION_FIELDS}


def fraction_to_str(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def fraction_from_str(text: str) -> Fraction:
    if not isinstance(text, str):
        raise TypeError(f"expected a 'p/q' string, got {text!r}")
    return Fraction(text)


def to_dict(report) -> dict:
    cls = type(report)
    if cls not in _FRACTION_FIELDS:
        raise TypeError(f"no encoding for {cls.__name__}")
    out = {"kind": cls.__name__}
    for f in dataclasses.fields(report):
        value = getattr(report, f.name)
        if f.name in _FRACTION_FIELDS[cls]:
            value = fraction_to_str(value)
        elif isinstance(value, tuple):
            value = [list(v) if isinstance(v, tuple) else v for v in value]
        out[f.name] = value
    return out


def from_dict(data: dict):
    cls = _KINDS[data["kind"]]
    kwargs = {}
    for f in dataclasses.fields(cls):
        value = data[f.name]
        if f.name in _FRACTION_FIELDS[cls]:
            value = fraction_from_str(value)
        elif isinstance(value, list):
            value = tuple(tuple(v) if isinstance(v, list) else v for v in value)
        kwargs[f.name] = value
    return cls(**kwargs)


def dumps(report, **kwargs) -> str:
    return json.dumps(to_dict(report), **kwargs)


def loads(text: str):
    return from_dict(json.loads(text))
