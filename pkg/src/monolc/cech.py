"""Brute-force graded local cohomology via the degree-a Cech strand.

For each subset F of the variables, the degree-a piece of the quotient
localized at the product of the x_i, i in F, is either 0 or a single
copy of k; which one is decided by a divisibility test against the
minimal generators.  The surviving subsets form a complex of vector
spaces with the usual alternating-sign inclusion maps, and its
cohomology gives dim H^i_m(S/I)_a directly.

This path deliberately shares nothing with the simplicial route except
the ideal types and the rank kernel, so agreement between the two is
meaningful evidence.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .ideals import MonomialIdeal, MultiDegree
from .linalg import FieldSpec, SparseMatrix, rank


def cech_piece_nonzero(ideal: MonomialIdeal, degree: MultiDegree, subset: Iterable[int]) -> bool:
    """Whether the degree-a piece of (S/I) localized at prod_{i in F} x_i
    is nonzero.

    The piece is spanned by the image of x^{a + N e_F} for N large, so
    it is nonzero iff every negative coordinate of a sits in F and no
    generator divides x^{a + N e_F}, i.e. for every generator some
    coordinate outside F stays strictly below the generator's exponent.
    """
    F = set(subset)
    n = ideal.n
    for i in F:
        if not 1 <= i <= n:
            raise ValueError(f"index {i} outside 1..{n}")
    if degree.n != n:
        raise ValueError("degree length does not match variable count")
    for i, e in enumerate(degree.entries, start=1):
        if e < 0 and i not in F:
            return False
    for m in ideal.gens:
        if all(
            degree.entries[i - 1] >= m.exponents[i - 1]
            for i in range(1, n + 1)
            if i not in F
        ):
            return False
    return True


@dataclass(frozen=True)
class CechStrand:
    """The degree-a layer of the Cech complex: admissible subsets by
    size, plus the alternating-sign differentials between levels."""

    n: int
    basis: tuple[tuple[tuple[int, ...], ...], ...]
    differentials: tuple[SparseMatrix, ...]

    def level_dim(self, p: int) -> int:
        if 0 <= p <= self.n:
            return len(self.basis[p])
        return 0


def _sign_of_insertion(subset: tuple[int, ...], j: int) -> int:
    # (-1)^(number of elements of F below j)
    below = sum(1 for v in subset if v < j)
    return -1 if below % 2 else 1


def cech_strand(ideal: MonomialIdeal, degree: MultiDegree) -> CechStrand:
    n = ideal.n
    basis: list[tuple[tuple[int, ...], ...]] = []
    for p in range(n + 1):
        level = tuple(
            F
            for F in combinations(range(1, n + 1), p)
            if cech_piece_nonzero(ideal, degree, F)
        )
        basis.append(level)
    diffs: list[SparseMatrix] = []
    for p in range(n):
        index_above = {F: r for r, F in enumerate(basis[p + 1])}
        entries: dict[tuple[int, int], int] = {}
        for c, F in enumerate(basis[p]):
            present = set(F)
            for j in range(1, n + 1):
                if j in present:
                    continue
                bigger = tuple(sorted(F + (j,)))
                r = index_above.get(bigger)
                if r is not None:
                    entries[(r, c)] = _sign_of_insertion(F, j)
        diffs.append(SparseMatrix(len(basis[p + 1]), len(basis[p]), entries))
    strand = CechStrand(n=n, basis=tuple(basis), differentials=tuple(diffs))
    _assert_complex(strand)
    return strand


def _assert_complex(strand: CechStrand) -> None:
    """Consecutive differentials must compose to zero over the integers."""
    for p in range(len(strand.differentials) - 1):
        lower = strand.differentials[p]
        upper = strand.differentials[p + 1]
        by_col: dict[int, list[tuple[int, int]]] = {}
        for (r, c), v in upper.entries.items():
            by_col.setdefault(c, []).append((r, v))
        acc: dict[tuple[int, int], int] = {}
        for (mid, c), v1 in lower.entries.items():
            for r, v2 in by_col.get(mid, ()):
                key = (r, c)
                acc[key] = acc.get(key, 0) + v2 * v1
        bad = {k: v for k, v in acc.items() if v != 0}
        if bad:
            raise AssertionError(f"differentials do not compose to zero: {bad}")


def cech_dims(ideal: MonomialIdeal, degree: MultiDegree, field: FieldSpec) -> dict[int, int]:
    """All nonzero cohomology dimensions of the degree-a strand."""
    strand = cech_strand(ideal, degree)
    ranks = [
        rank(d, field) if d.entries else 0 for d in strand.differentials
    ]
    dims: dict[int, int] = {}
    for p in range(strand.n + 1):
        above = ranks[p] if p < strand.n else 0
        below = ranks[p - 1] if p > 0 else 0
        h = strand.level_dim(p) - above - below
        if h:
            dims[p] = h
    return dims


def cech_cohomology_dim(
    ideal: MonomialIdeal, degree: MultiDegree, index: int, field: FieldSpec
) -> int:
    """dim_k H^i_m(S/I)_a computed without any simplicial machinery."""
    return cech_dims(ideal, degree, field).get(index, 0)
