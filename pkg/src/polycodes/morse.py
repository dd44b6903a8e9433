"""Generic linear height functions on realized polytopes.

A height function orients the 1-skeleton; the count of down-edges at a
vertex is its index. Index histograms reproduce the h-vector, and the
lowest-vertex faces picked here give independent face-code vectors.
All arithmetic is exact rational, so genericity is a sharp yes or no.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import GenericityFailure, InvalidInput, TheoremViolation, Unrealized
from .facecodes import face_code
from .gf2 import reduce
from .polytope import (
    Face,
    SimplePolytope,
    face_indicator,
    faces_of_codim,
    fh_vectors,
    is_even,
    vertex_neighbors,
)

__all__ = [
    "HeightFunction",
    "extract_basis",
    "generic_height",
    "height_from_objective",
    "index_histogram",
    "vertex_indices",
]


@dataclass(frozen=True)
class HeightFunction:
    """Linear objective and its value at every vertex; values must be distinct."""

    objective: tuple[Fraction, ...]
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(set(self.values)) != len(self.values):
            raise GenericityFailure("height values collide; the objective is not generic")


def height_from_objective(
    P: SimplePolytope, objective: tuple[Fraction | int, ...]
) -> HeightFunction:
    if P.coords is None:
        raise Unrealized("the polytope carries no coordinates")
    obj = tuple(Fraction(x) for x in objective)
    if len(obj) != P.dim:
        raise InvalidInput(f"objective has {len(obj)} entries for dimension {P.dim}")
    values = tuple(
        sum((c * o for c, o in zip(point, obj)), Fraction(0)) for point in P.coords
    )
    return HeightFunction(objective=obj, values=values)


def generic_height(P: SimplePolytope, seed: int) -> HeightFunction:
    """Deterministically sample integer objectives until the values separate.

    Entries are drawn uniformly from [-bound, bound] starting at 16; the
    bound doubles after every collision. At most 100 draws are tried.
    """
    if P.coords is None:
        raise Unrealized("the polytope carries no coordinates")
    rng = random.Random(seed)
    bound = 16
    for _ in range(100):
        objective = tuple(rng.randint(-bound, bound) for _ in range(P.dim))
        try:
            return height_from_objective(P, objective)
        except GenericityFailure:
            bound *= 2
    raise GenericityFailure("no generic objective found in 100 draws")


def _check_height(P: SimplePolytope, phi: HeightFunction) -> None:
    if len(phi.values) != P.num_vertices:
        raise InvalidInput(
            f"height has {len(phi.values)} values for {P.num_vertices} vertices"
        )


def vertex_indices(P: SimplePolytope, phi: HeightFunction) -> tuple[int, ...]:
    """Index of each vertex: how many of its neighbors sit below it."""
    _check_height(P, phi)
    neighbors = vertex_neighbors(P)
    return tuple(
        sum(1 for w in neighbors[v] if phi.values[w] < phi.values[v])
        for v in range(P.num_vertices)
    )


def index_histogram(P: SimplePolytope, phi: HeightFunction) -> tuple[int, ...]:
    """Histogram of vertex indices; must reproduce the h-vector."""
    hist = [0] * (P.dim + 1)
    for ind in vertex_indices(P, phi):
        hist[ind] += 1
    histogram = tuple(hist)
    h = fh_vectors(P).h
    if histogram != h:
        raise TheoremViolation(f"index histogram {histogram} differs from h-vector {h}")
    return histogram


def extract_basis(
    P: SimplePolytope, phi: HeightFunction, k: int
) -> list[tuple[int, Face]]:
    """Pick one codimension-k face per vertex of index at most k.

    Each selected vertex contributes the face spanned by the
    lexicographically smallest (n-k)-subset of its upward edges. The
    resulting indicators are asserted independent; on even polytopes
    they must additionally span the whole codimension-k code. The
    selected vertex is always the unique lowest vertex of its face,
    which is what forces independence.
    """
    if not 0 <= k <= P.dim:
        raise InvalidInput(f"codimension {k} out of range 0..{P.dim}")
    indices = vertex_indices(P, phi)
    faces_by_def = {f.defining_facets: f for f in faces_of_codim(P, k)}
    neighbors = vertex_neighbors(P)
    n = P.dim
    selected: list[tuple[int, Face]] = []
    for v in range(P.num_vertices):
        if indices[v] > k:
            continue
        up = sorted(w for w in neighbors[v] if phi.values[w] > phi.values[v])
        fv = P.vertex_facets[v]
        dropped = set()
        for w in up[: n - k]:
            (facet,) = fv - P.vertex_facets[w]
            dropped.add(facet)
        face = faces_by_def[tuple(sorted(fv - dropped))]
        bottom = min(face.vertex_set, key=lambda u: phi.values[u])
        if bottom != v:
            raise TheoremViolation(
                f"vertex {v} is not the lowest vertex of its selected face"
            )
        selected.append((v, face))
    vectors = [face_indicator(P, f) for _, f in selected]
    span = reduce(vectors, length=P.num_vertices)
    if span.dim != len(vectors):
        raise TheoremViolation("selected face indicators are linearly dependent")
    expected = sum(fh_vectors(P).h[: k + 1])
    if len(vectors) != expected:
        raise TheoremViolation(f"selected {len(vectors)} faces, expected {expected}")
    if is_even(P) and span != face_code(P, k).code:
        raise TheoremViolation(
            "selected faces fail to span the face code of an even polytope"
        )
    return selected
