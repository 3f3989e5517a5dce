"""Reading and writing coefficient-sequence files.

The canonical on-disk form is JSON with string-encoded values: exact entries
as reduced fractions ("p/q" or a bare integer), float entries as shortest
round-trip decimals. Writing is deterministic, so write -> read -> write is
byte-identical. A flat "n,value" CSV rendering is available for spreadsheets;
it carries no metadata and is not read back.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from pathlib import Path

from .walk import EXACT, FLOAT, CoeffSeq

__all__ = [
    "SequenceFormatError",
    "sequence_to_json",
    "sequence_from_json",
    "read_sequence",
    "write_sequence",
    "sequence_to_csv",
]


class SequenceFormatError(ValueError):
    """A sequence file does not match the expected schema."""


def sequence_to_json(seq: CoeffSeq) -> str:
    if seq.kind == EXACT:
        vals = [str(v) for v in seq.values]
    else:
        vals = [repr(v) for v in seq.values]
    doc = {
        "dimension": seq.dimension,
        "n_max": seq.n_max,
        "kind": seq.kind,
        "values": vals,
    }
    return json.dumps(doc, indent=2) + "\n"


def sequence_from_json(text: str) -> CoeffSeq:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SequenceFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SequenceFormatError("top level must be a JSON object")
    for key in ("dimension", "n_max", "kind", "values"):
        if key not in doc:
            raise SequenceFormatError(f"missing required key {key!r}")
    dimension = doc["dimension"]
    n_max = doc["n_max"]
    kind = doc["kind"]
    raw = doc["values"]
    if not isinstance(dimension, int) or isinstance(dimension, bool) or dimension < 1:
        raise SequenceFormatError("'dimension' must be an integer >= 1")
    if not isinstance(n_max, int) or isinstance(n_max, bool) or n_max < 0:
        raise SequenceFormatError("'n_max' must be an integer >= 0")
    if kind not in (EXACT, FLOAT):
        raise SequenceFormatError(f"'kind' must be {EXACT!r} or {FLOAT!r}")
    if not isinstance(raw, list) or not all(isinstance(v, str) for v in raw):
        raise SequenceFormatError("'values' must be a list of strings")
    if len(raw) != n_max + 1:
        raise SequenceFormatError(
            f"'values' must have n_max + 1 = {n_max + 1} entries, got {len(raw)}"
        )
    if kind == EXACT:
        try:
            values = tuple(Fraction(s) for s in raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise SequenceFormatError(f"bad exact value: {exc}") from exc
    else:
        try:
            values = tuple(float(s) for s in raw)
        except ValueError as exc:
            raise SequenceFormatError(f"bad float value: {exc}") from exc
        if not all(math.isfinite(v) for v in values):
            raise SequenceFormatError("float values must be finite")
    return CoeffSeq(dimension, values, kind)


def read_sequence(path) -> CoeffSeq:
    return sequence_from_json(Path(path).read_text(encoding="utf-8"))


def write_sequence(path, seq: CoeffSeq) -> None:
    Path(path).write_text(sequence_to_json(seq), encoding="utf-8")


def sequence_to_csv(seq: CoeffSeq) -> str:
    lines = ["n,value"]
    for n, v in enumerate(seq.values):
        lines.append(f"{n},{v}" if seq.kind == EXACT else f"{n},{v!r}")
    return "\n".join(lines) + "\n"
