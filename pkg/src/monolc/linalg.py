"""Exact rank computation for sparse matrices over Q or a prime field.

No floating point anywhere: the rational path clears denominators and
runs a fraction-free integer elimination, the modular path reduces
mod p.  Pivoting is deterministic, so repeated runs agree exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: Q when p is None, else GF(p)."""

    p: int | None = None

    def __post_init__(self) -> None:
        if self.p is not None:
            if not isinstance(self.p, int) or isinstance(self.p, bool):
                raise ValueError("characteristic must be an integer")
            if not 2 <= self.p < 2**31:
                raise ValueError(f"characteristic out of range: {self.p}")
            if not _is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def gf(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        t = text.strip().lower()
        if t == "q":
            return cls(None)
        if t.startswith("gf:"):
            body = t[3:]
            if not body.isdigit():
                raise ValueError(f"bad field spec {text!r}")
            return cls(int(body))
        raise ValueError(f"bad field spec {text!r}")

    @property
    def is_rationals(self) -> bool:
        return self.p is None

    def __str__(self) -> str:
        return "q" if self.p is None else f"gf:{self.p}"


class SparseMatrix:
    """Immutable sparse matrix with exact entries keyed by (row, col)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Mapping[tuple[int, int], object] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimensions")
        self.rows = rows
        self.cols = cols
        cleaned: dict[tuple[int, int], object] = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise ValueError(f"entry ({r}, {c}) outside a {rows}x{cols} matrix")
            if not isinstance(v, (int, Fraction)) or isinstance(v, bool):
                raise ValueError(f"entries must be int or Fraction, got {v!r}")
            if v != 0:
                cleaned[(r, c)] = v
        self.entries = cleaned

    @classmethod
    def from_dense(cls, data: list) -> "SparseMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        entries = {}
        for r, row in enumerate(data):
            if len(row) != cols:
                raise ValueError("ragged dense matrix")
            for c, v in enumerate(row):
                if v != 0:
                    entries[(r, c)] = v
        return cls(rows, cols, entries)

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(
            self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={len(self.entries)})"


def _row_dicts(matrix: SparseMatrix) -> list[dict[int, object]]:
    rows: dict[int, dict[int, object]] = {}
    for (r, c), v in matrix.entries.items():
        rows.setdefault(r, {})[c] = v
    return [rows[r] for r in sorted(rows)]


def _strip_gcd(row: dict[int, int]) -> None:
    g = 0
    for v in row.values():
        g = math.gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for c in row:
            row[c] //= g


def _rank_over_q(rows: list[dict[int, int]]) -> int:
    active = {i: r for i, r in enumerate(rows) if r}
    col_users: dict[int, set[int]] = {}
    for rid, row in active.items():
        for c in row:
            col_users.setdefault(c, set()).add(rid)
    rank = 0
    while active:
        # shortest row first keeps fill-in down; ties break by row id
        prid = min(active, key=lambda r: (len(active[r]), r))
        prow = active.pop(prid)
        for c in prow:
            col_users[c].discard(prid)
        pcol = min(prow, key=lambda c: (abs(prow[c]) != 1, len(col_users[c]), c))
        pval = prow[pcol]
        rank += 1
        for rid in sorted(col_users[pcol]):
            row = active[rid]
            f = row.pop(pcol)
            col_users[pcol].discard(rid)
            if pval == 1 or pval == -1:
                scale_row, scale_piv = 1, f * pval
            else:
                g = math.gcd(f, pval)
                scale_row, scale_piv = pval // g, f // g
            if scale_row != 1:
                for c in row:
                    row[c] *= scale_row
            for c, v in prow.items():
                if c == pcol:
                    continue
                cur = row.get(c, 0) - scale_piv * v
                if cur:
                    if c not in row:
                        col_users.setdefault(c, set()).add(rid)
                    row[c] = cur
                elif c in row:
                    del row[c]
                    col_users[c].discard(rid)
            if scale_row != 1:
                _strip_gcd(row)
            if not row:
                del active[rid]
    return rank


def _rank_mod_p(rows: list[dict[int, int]], p: int) -> int:
    active = {i: r for i, r in enumerate(rows) if r}
    col_users: dict[int, set[int]] = {}
    for rid, row in active.items():
        for c in row:
            col_users.setdefault(c, set()).add(rid)
    rank = 0
    while active:
        prid = min(active, key=lambda r: (len(active[r]), r))
        prow = active.pop(prid)
        for c in prow:
            col_users[c].discard(prid)
        pcol = min(prow, key=lambda c: (len(col_users[c]), c))
        inv = pow(prow[pcol], -1, p)
        rank += 1
        for rid in sorted(col_users[pcol]):
            row = active[rid]
            factor = (row.pop(pcol) * inv) % p
            col_users[pcol].discard(rid)
            for c, v in prow.items():
                if c == pcol:
                    continue
                cur = (row.get(c, 0) - factor * v) % p
                if cur:
                    if c not in row:
                        col_users.setdefault(c, set()).add(rid)
                    row[c] = cur
                elif c in row:
                    del row[c]
                    col_users[c].discard(rid)
            if not row:
                del active[rid]
    return rank


def rank(matrix: SparseMatrix, field: FieldSpec) -> int:
    """Rank of the matrix over the given field.

    Rational entries are allowed for either field; over GF(p) a
    denominator divisible by p is an error.
    """
    raw = _row_dicts(matrix)
    if field.is_rationals:
        rows = []
        for row in raw:
            lcm = 1
            for v in row.values():
                if isinstance(v, Fraction):
                    lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
            cleaned = {}
            for c, v in row.items():
                iv = int(v * lcm)
                if iv:
                    cleaned[c] = iv
            rows.append(cleaned)
        return _rank_over_q(rows)
    p = field.p
    rows = []
    for row in raw:
        cleaned = {}
        for c, v in row.items():
            if isinstance(v, Fraction):
                if v.denominator % p == 0:
                    raise ValueError(f"denominator of {v} vanishes mod {p}")
                iv = (v.numerator * pow(v.denominator, -1, p)) % p
            else:
                iv = v % p
            if iv:
                cleaned[c] = iv
        rows.append(cleaned)
    return _rank_mod_p(rows, p)
