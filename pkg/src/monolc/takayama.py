"""Graded local cohomology of a monomial quotient via combinatorics.

For a multidegree a the graded piece H^i_m(S/I)_a is computed as the
reduced cohomology, shifted by |{j : a_j < 0}| + 1, of a simplicial
complex determined by a and the minimal generators of I.  Everything
here reduces to exact rank computations, so results are field-aware.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .ideals import MonomialIdeal, MultiDegree, rho
from .linalg import FieldSpec
from .simplicial import SimplicialComplex, reduced_cohomology_dims


def takayama_complex(ideal: MonomialIdeal, degree: MultiDegree) -> SimplicialComplex:
    """The degree-a complex whose faces are the sets F \\ supp_-(a).

    A subset G of the non-negative positions is a face iff for every
    minimal generator some position outside G (and outside supp_-(a))
    has a_j strictly below the generator's exponent.  If the ideal is
    zero the complex is the full simplex on those positions.
    """
    n = ideal.n
    if degree.n != n:
        raise ValueError("degree length does not match variable count")
    neg = degree.negative_support()
    wbits = [i for i in range(n) if (i + 1) not in neg]
    blockers: list[int] = []
    for m in ideal.gens:
        b = 0
        for i in wbits:
            if degree.entries[i] < m.exponents[i]:
                b |= 1 << i
        if b == 0:
            # no admissible position left for this generator: no faces at all
            return SimplicialComplex.void(n)
        blockers.append(b)
    wmask = 0
    for i in wbits:
        wmask |= 1 << i
    faces = []
    sub = wmask
    while True:
        if all(b & ~sub for b in blockers):
            faces.append(frozenset(i + 1 for i in range(n) if sub & (1 << i)))
        if sub == 0:
            break
        sub = (sub - 1) & wmask
    return SimplicialComplex(n, faces, validate=False)


def lc_dims(ideal: MonomialIdeal, degree: MultiDegree, field: FieldSpec) -> dict[int, int]:
    """All nonzero graded local cohomology dimensions at one degree,
    as a map cohomological index -> dimension."""
    shift = len(degree.negative_support()) + 1
    cx = takayama_complex(ideal, degree)
    return {
        j + shift: d for j, d in reduced_cohomology_dims(cx, field).items()
    }


def lc_dim(ideal: MonomialIdeal, degree: MultiDegree, index: int, field: FieldSpec) -> int:
    """dim_k of the degree-a piece of H^i_m(S/I)."""
    if index < 0:
        raise ValueError("cohomological index must be non-negative")
    return lc_dims(ideal, degree, field).get(index, 0)


def canonical_box(ideal: MonomialIdeal) -> list[MultiDegree]:
    """All degrees with -1 <= a_i <= rho_i - 1, in lexicographic order.

    Every degree with some a_i outside this window either repeats a
    boxed value (after truncating negatives to -1) or vanishes."""
    ranges = [range(-1, r) for r in rho(ideal)]
    return [MultiDegree(t) for t in itertools.product(*ranges)]


@dataclass(frozen=True)
class DepthDim:
    depth: int
    dim: int

    @property
    def is_cohen_macaulay(self) -> bool:
        return self.depth == self.dim


@dataclass(frozen=True)
class LCTable:
    """All nonzero graded local cohomology dimensions over the box."""

    ideal: MonomialIdeal
    field: FieldSpec
    entries: tuple[tuple[MultiDegree, int, int], ...]

    def __post_init__(self) -> None:
        ordered = tuple(
            sorted(self.entries, key=lambda e: (e[0].entries, e[1]))
        )
        object.__setattr__(self, "entries", ordered)

    def dims_at(self, degree: MultiDegree) -> dict[int, int]:
        return {i: d for deg, i, d in self.entries if deg == degree}

    def nonzero_indices(self) -> set[int]:
        return {i for _, i, _ in self.entries}

    def to_json_dict(self) -> dict:
        return {
            "vars": list(self.ideal.var_names),
            "field": str(self.field),
            "entries": [
                {"degree": list(deg.entries), "i": i, "dim": d}
                for deg, i, d in self.entries
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    def to_tsv(self) -> str:
        lines = ["degree\ti\tdim"]
        for deg, i, d in self.entries:
            lines.append(f"{','.join(map(str, deg.entries))}\t{i}\t{d}")
        return "\n".join(lines) + "\n"


def lc_table(ideal: MonomialIdeal, field: FieldSpec) -> LCTable:
    """Sweep the canonical box and record every nonzero graded piece."""
    if ideal.is_unit:
        raise ValueError("the unit ideal has a zero quotient")
    n = ideal.n
    entries = []
    for degree in canonical_box(ideal):
        for i, d in sorted(lc_dims(ideal, degree, field).items()):
            if not 0 <= i <= n:
                raise AssertionError(
                    f"cohomology index {i} outside 0..{n} at degree {degree.entries}"
                )
            entries.append((degree, i, d))
    return LCTable(ideal, field, tuple(entries))


def depth_and_dim(
    ideal: MonomialIdeal, field: FieldSpec, table: LCTable | None = None
) -> DepthDim:
    """Depth and Krull dimension of S/I read off the nonzero indices."""
    if ideal.is_unit:
        raise ValueError("the unit ideal has a zero quotient")
    if table is None:
        table = lc_table(ideal, field)
    indices = table.nonzero_indices()
    if not indices:
        raise AssertionError("a nonzero quotient must have nonzero local cohomology")
    return DepthDim(depth=min(indices), dim=max(indices))
