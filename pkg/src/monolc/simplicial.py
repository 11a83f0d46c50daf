"""Simplicial complexes on vertices 1..n and their reduced cohomology.

The empty family (no faces at all, the void complex) and the complex
whose only face is the empty set are distinct objects: the void complex
has no cohomology in any index, while {emptyset} has reduced H^{-1} = k.
"""

from __future__ import annotations

from typing import Iterable

from .linalg import FieldSpec, SparseMatrix, rank


class SimplicialComplex:
    """Immutable complex: a downward-closed family of subsets of 1..n."""

    __slots__ = ("n_vertices", "faces", "_cohomology_cache")

    def __init__(
        self,
        n_vertices: int,
        faces: Iterable[frozenset[int]],
        validate: bool = True,
    ):
        if n_vertices < 0:
            raise ValueError("negative vertex count")
        fam = frozenset(frozenset(f) for f in faces)
        if validate:
            for f in fam:
                for v in f:
                    if not 1 <= v <= n_vertices:
                        raise ValueError(f"vertex {v} outside 1..{n_vertices}")
                for v in f:
                    if f - {v} not in fam:
                        raise ValueError("family is not downward closed")
            if fam and frozenset() not in fam:
                raise ValueError("family is not downward closed")
        object.__setattr__(self, "n_vertices", n_vertices)
        object.__setattr__(self, "faces", fam)
        object.__setattr__(self, "_cohomology_cache", {})

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("SimplicialComplex is immutable")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.n_vertices == other.n_vertices and self.faces == other.faces

    def __hash__(self) -> int:
        return hash((self.n_vertices, self.faces))

    def __repr__(self) -> str:
        if self.is_void:
            return f"SimplicialComplex(n={self.n_vertices}, void)"
        return f"SimplicialComplex(n={self.n_vertices}, faces={len(self.faces)})"

    @classmethod
    def void(cls, n_vertices: int) -> "SimplicialComplex":
        return cls(n_vertices, (), validate=False)

    @classmethod
    def irrelevant(cls, n_vertices: int) -> "SimplicialComplex":
        return cls(n_vertices, (frozenset(),), validate=False)

    @classmethod
    def from_facets(
        cls, n_vertices: int, facets: Iterable[Iterable[int]]
    ) -> "SimplicialComplex":
        faces = {frozenset()}
        for facet in facets:
            top = frozenset(facet)
            for v in top:
                if not 1 <= v <= n_vertices:
                    raise ValueError(f"vertex {v} outside 1..{n_vertices}")
            stack = [top]
            while stack:
                f = stack.pop()
                if f in faces:
                    continue
                faces.add(f)
                for v in f:
                    stack.append(f - {v})
        return cls(n_vertices, faces, validate=False)

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def is_irrelevant(self) -> bool:
        return len(self.faces) == 1

    def has_face(self, face: Iterable[int]) -> bool:
        return frozenset(face) in self.faces

    def dimension(self) -> int:
        """Max face cardinality minus one; the void complex has none."""
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(len(f) for f in self.faces) - 1

    def facets(self) -> list[tuple[int, ...]]:
        """Maximal faces, each sorted, ordered by (size, lex)."""
        maximal = [
            f
            for f in self.faces
            if not any(f < g for g in self.faces if len(g) == len(f) + 1)
        ]
        return sorted((tuple(sorted(f)) for f in maximal), key=lambda t: (len(t), t))


def is_cone(cx: SimplicialComplex, apex: int) -> bool:
    """Whether every face stays a face after adjoining the apex."""
    if cx.is_void:
        raise ValueError("the void complex is not a cone over anything")
    if not 1 <= apex <= cx.n_vertices:
        raise ValueError(f"vertex {apex} outside 1..{cx.n_vertices}")
    av = frozenset((apex,))
    return all((f | av) in cx.faces for f in cx.faces)


def euler_characteristic_reduced(cx: SimplicialComplex) -> int:
    """Alternating face count including the empty face with sign -1."""
    total = 0
    for f in cx.faces:
        total += 1 if (len(f) - 1) % 2 == 0 else -1
    return total


def _coboundary_levels(cx: SimplicialComplex) -> tuple[dict[int, list[int]], dict[int, SparseMatrix]]:
    """Face masks grouped by dimension, plus all coboundary matrices."""
    verts = sorted({v for f in cx.faces for v in f})
    bit_of = {v: 1 << i for i, v in enumerate(verts)}
    levels: dict[int, list[int]] = {}
    for f in cx.faces:
        mask = 0
        for v in f:
            mask |= bit_of[v]
        levels.setdefault(len(f) - 1, []).append(mask)
    for masks in levels.values():
        masks.sort()
    index: dict[int, dict[int, int]] = {
        d: {m: i for i, m in enumerate(masks)} for d, masks in levels.items()
    }
    deltas: dict[int, SparseMatrix] = {}
    for d, masks in sorted(levels.items()):
        above = index.get(d + 1, {})
        entries: dict[tuple[int, int], int] = {}
        if above:
            for j, mask in enumerate(masks):
                for v in verts:
                    b = bit_of[v]
                    if mask & b:
                        continue
                    row = above.get(mask | b)
                    if row is None:
                        continue
                    sign = -1 if (mask & (b - 1)).bit_count() % 2 else 1
                    entries[(row, j)] = sign
        deltas[d] = SparseMatrix(len(above), len(masks), entries)
    return levels, deltas


def reduced_cohomology_dims(cx: SimplicialComplex, field: FieldSpec) -> dict[int, int]:
    """Dimensions of the nonzero reduced cohomology groups.

    Returns a map index -> dimension containing only nonzero entries;
    the void complex gives {} and {emptyset} gives {-1: 1}.
    """
    cached = cx._cohomology_cache.get(field)
    if cached is not None:
        return dict(cached)
    levels, deltas = _coboundary_levels(cx)
    ranks = {d: rank(m, field) for d, m in deltas.items() if m.entries}
    dims: dict[int, int] = {}
    for d, masks in levels.items():
        h = len(masks) - ranks.get(d, 0) - ranks.get(d - 1, 0)
        if h:
            dims[d] = h
    cx._cohomology_cache[field] = dims
    return dict(dims)
