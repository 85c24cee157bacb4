"""JSON documents for series: ``{"k": 2, "order": 3, "coeffs": ["1", "-1", "1/2"]}``.

Coefficients are exact rational strings so a round trip never loses
information.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any

from .algebra import Poly, TruncatedSeries


_RATIONAL = re.compile(r"-?\d+(/\d+)?")


def fraction_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    if not isinstance(text, str):
        raise ValueError(f"coefficients must be strings, got {text!r}")
    text = text.strip()
    if not _RATIONAL.fullmatch(text):
        raise ValueError(f"not an exact rational 'p' or 'p/q': {text!r}")
    return Fraction(text)


def series_to_document(f: TruncatedSeries, k: int | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {}
    if k is not None:
        doc["k"] = k
    doc["order"] = f.order
    doc["coeffs"] = [fraction_str(c) for c in f.coeffs]
    return doc


def document_to_series(doc: dict[str, Any]) -> tuple[TruncatedSeries, int | None]:
    order = doc["order"]
    coeffs = [parse_fraction(c) for c in doc["coeffs"]]
    if len(coeffs) != order:
        raise ValueError(f"document declares order {order} but holds {len(coeffs)} coefficients")
    k = doc.get("k")
    if k is not None and (not isinstance(k, int) or k < 2):
        raise ValueError("k must be an integer >= 2")
    return TruncatedSeries(coeffs, order), k


def dumps_series(f: TruncatedSeries, k: int | None = None) -> str:
    return json.dumps(series_to_document(f, k))


def loads_series(text: str) -> tuple[TruncatedSeries, int | None]:
    return document_to_series(json.loads(text))


def write_series(path: str | Path, f: TruncatedSeries, k: int | None = None) -> None:
    Path(path).write_text(dumps_series(f, k) + "\n", encoding="utf-8")


def read_series(path: str | Path) -> tuple[TruncatedSeries, int | None]:
    return loads_series(Path(path).read_text(encoding="utf-8"))


def poly_to_list(p: Poly) -> list[str]:
    return [fraction_str(c) for c in p.coeffs]


SERIES_SCHEMA = {
    "type": "object",
    "properties": {
        "k": {"type": "integer", "minimum": 2},
        "order": {"type": "integer", "minimum": 0},
        "coeffs": {"type": "array", "items": {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}},
    },
    "required": ["order", "coeffs"],
    "additionalProperties": False,
}
