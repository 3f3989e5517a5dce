"""Sequence-level dimension walks.

A CoeffSeq holds a truncated expansion-coefficient sequence b_0..b_N at a
fixed sphere dimension. Each two-dimension step consumes the two trailing
entries (nothing is ever extrapolated past the truncation), so a k-step walk
shortens the sequence by 2k while raising the dimension by 2k.

Two routes compute the same walk: repeated application of the two-step
recursion (``step_up``) and the closed-form weight rows
(``walk_closed_form``). ``verify_walk_equivalence`` runs both and compares.
All transformations are pure; rows are computed independently of each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .weights import even_weights, odd_weights

__all__ = [
    "EXACT",
    "FLOAT",
    "CoeffSeq",
    "step_up",
    "walk_closed_form",
    "verify_walk_equivalence",
    "zero_row_identity_check",
]

EXACT = "exact"
FLOAT = "float"

# Float-mode comparison: relative tolerance with an absolute floor near zero.
REL_TOL = 1e-12
ABS_FLOOR = 1e-15


@dataclass(frozen=True)
class CoeffSeq:
    """Truncated coefficient sequence: values[n] = b_n for n = 0..n_max."""

    dimension: int
    values: tuple
    kind: str

    def __post_init__(self):
        if self.dimension < 1:
            raise ValueError("dimension must be >= 1")
        if self.kind not in (EXACT, FLOAT):
            raise ValueError(f"kind must be {EXACT!r} or {FLOAT!r}")
        if len(self.values) == 0:
            raise ValueError("sequence must contain at least one value")
        if self.kind == EXACT:
            vals = tuple(Fraction(v) for v in self.values)
        else:
            vals = tuple(float(v) for v in self.values)
            if not all(math.isfinite(v) for v in vals):
                raise ValueError("all values must be finite")
        object.__setattr__(self, "values", vals)

    @classmethod
    def exact(cls, dimension: int, values) -> "CoeffSeq":
        return cls(dimension, tuple(values), EXACT)

    @classmethod
    def floats(cls, dimension: int, values) -> "CoeffSeq":
        return cls(dimension, tuple(values), FLOAT)

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def total(self):
        """Sum of all entries; exact for exact sequences."""
        if self.kind == EXACT:
            return sum(self.values, Fraction(0))
        return math.fsum(self.values)

    def to_floats(self) -> "CoeffSeq":
        if self.kind == FLOAT:
            return self
        return CoeffSeq.floats(self.dimension, (float(v) for v in self.values))


def _close(a: float, b: float, rel: float = REL_TOL, floor: float = ABS_FLOOR) -> bool:
    return abs(a - b) <= max(rel * max(abs(a), abs(b)), floor)


def step_up(seq: CoeffSeq) -> CoeffSeq:
    """One d -> d+2 step of the coefficient recursion; n_max drops by 2.

    Dimension 1 has its own displayed form (the generic ratio degenerates to
    0/0 at n = 0):

        b'_0 = b_0 - b_2 / 2,   b'_n = (n+1)(b_n - b_{n+2}) / 2

    while for d >= 2 every row uses

        b'_n = (n+d-1)(n+d) / (d(2n+d-1)) * b_n
             - (n+1)(n+2) / (d(2n+d+3))   * b_{n+2}.
    """
    if seq.n_max < 2:
        raise ValueError("need n_max >= 2 to form any output entry")
    d = seq.dimension
    exact = seq.kind == EXACT
    v = seq.values
    out = []
    for n in range(seq.n_max - 1):
        if d == 1:
            if n == 0:
                half = Fraction(1, 2) if exact else 0.5
                out.append(v[0] - half * v[2])
            else:
                c = Fraction(n + 1, 2) if exact else (n + 1) / 2
                out.append(c * (v[n] - v[n + 2]))
        else:
            if exact:
                a = Fraction((n + d - 1) * (n + d), d * (2 * n + d - 1))
                b = Fraction((n + 1) * (n + 2), d * (2 * n + d + 3))
            else:
                a = (n + d - 1) * (n + d) / (d * (2 * n + d - 1))
                b = (n + 1) * (n + 2) / (d * (2 * n + d + 3))
            out.append(a * v[n] - b * v[n + 2])
    return CoeffSeq(d + 2, tuple(out), seq.kind)


def walk_closed_form(seq: CoeffSeq, k: int) -> CoeffSeq:
    """Walk a dimension-1 or dimension-2 sequence up by 2k in one shot.

    Output entry n is sum_i w_i(n,k) * values[n+2i] with the odd- or
    even-target weight row; output n_max = n_max - 2k.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if seq.dimension not in (1, 2):
        raise ValueError("closed-form walks start at dimension 1 or 2")
    if seq.n_max < 2 * k:
        raise ValueError(f"sequence too short: need n_max >= 2k = {2 * k}")
    rows = odd_weights if seq.dimension == 1 else even_weights
    exact = seq.kind == EXACT
    out = []
    for n in range(seq.n_max - 2 * k + 1):
        row = rows(n, k)
        if exact:
            out.append(sum(w * seq.values[n + 2 * i] for i, w in enumerate(row.weights)))
        else:
            out.append(
                math.fsum(w * seq.values[n + 2 * i] for i, w in enumerate(row.as_floats()))
            )
    return CoeffSeq(seq.dimension + 2 * k, tuple(out), seq.kind)


def verify_walk_equivalence(seq: CoeffSeq, k: int) -> bool:
    """True iff k repeated steps and the closed-form walk agree entrywise.

    Exact sequences must match exactly; float sequences within relative
    1e-12 (absolute floor 1e-15 near zero).
    """
    closed = walk_closed_form(seq, k)
    stepped = seq
    for _ in range(k):
        stepped = step_up(stepped)
    if seq.kind == EXACT:
        return closed.values == stepped.values
    return all(_close(a, b) for a, b in zip(closed.values, stepped.values))


def zero_row_identity_check(seq: CoeffSeq) -> bool:
    """Check the n = 0 output of a step against b'_0 = b_0 - 2/(d(d+3)) b_2."""
    if seq.n_max < 2:
        raise ValueError("need n_max >= 2")
    d = seq.dimension
    top = step_up(seq).values[0]
    if seq.kind == EXACT:
        return top == seq.values[0] - Fraction(2, d * (d + 3)) * seq.values[2]
    return _close(top, seq.values[0] - 2 / (d * (d + 3)) * seq.values[2])
