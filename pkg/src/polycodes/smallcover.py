"""Vector colorings of facets: characteristic data, components, involutions.

A vector coloring assigns each facet a nonzero vector of an
r-dimensional binary vector space, encoded as an integer bitset. The
checks here compute the numeric consequences only; no manifold is ever
materialized.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Mapping

from .errors import InvalidInput, TheoremViolation
from .facecodes import Coloring, colorability_report
from .polytope import SimplePolytope, fh_vectors

__all__ = [
    "InvolutionReport",
    "VectorColoring",
    "admits_regular_m_involution",
    "component_count",
    "lift_coloring",
    "validate_characteristic",
    "vector_coloring_from_json",
    "vector_coloring_to_json",
]


@dataclass(frozen=True)
class VectorColoring:
    """colors[i] is the nonzero vector on facet i, packed with bit j = coordinate j."""

    r: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.r < 1:
            raise InvalidInput(f"ambient rank must be positive, got {self.r}")
        for i, c in enumerate(self.colors):
            if not 0 < c < 2**self.r:
                raise InvalidInput(
                    f"facet {i} has color {c}, outside the nonzero {self.r}-bit range"
                )


def _int_rank(vectors: list[int]) -> int:
    # Plain elimination on packed ints; colors are tiny, no need for BitVector.
    pivots: list[int] = []
    for v in vectors:
        for p in pivots:
            v = min(v, v ^ p)
        if v:
            pivots.append(v)
    return len(pivots)


def _check_facet_count(P: SimplePolytope, mu: VectorColoring) -> None:
    if len(mu.colors) != P.num_facets:
        raise InvalidInput(
            f"coloring has {len(mu.colors)} colors for {P.num_facets} facets"
        )


def validate_characteristic(P: SimplePolytope, lam: VectorColoring) -> bool:
    """True iff at every vertex the dim incident facet colors are independent."""
    _check_facet_count(P, lam)
    if lam.r != P.dim:
        raise InvalidInput(f"ambient rank {lam.r} must equal the dimension {P.dim}")
    return all(
        _int_rank([lam.colors[i] for i in fs]) == P.dim for fs in P.vertex_facets
    )


def component_count(P: SimplePolytope, mu: VectorColoring) -> int:
    """Number of components of the glued space: 2^(r - rank of the color span)."""
    _check_facet_count(P, mu)
    return 2 ** (mu.r - _int_rank(list(mu.colors)))


@dataclass(frozen=True)
class InvolutionReport:
    admits: bool
    fixed_points: int | None
    betti: tuple[int, ...] | None


def admits_regular_m_involution(P: SimplePolytope, lam: VectorColoring) -> InvolutionReport:
    """Whether some group element acts with only isolated fixed points.

    This happens exactly when the coloring's image is n distinct vectors
    forming a basis. In that case the fixed points number |V| and the
    mod-2 Betti numbers are the h-vector.
    """
    if not validate_characteristic(P, lam):
        raise InvalidInput("the coloring is not characteristic for this polytope")
    image = set(lam.colors)
    admits = len(image) == P.dim and _int_rank(sorted(image)) == P.dim
    if not admits:
        return InvolutionReport(admits=False, fixed_points=None, betti=None)
    report = colorability_report(P)
    if P.dim >= 3 and not report.colorable:
        raise TheoremViolation(
            "a basis-image characteristic coloring exists on a non-colorable polytope"
        )
    return InvolutionReport(
        admits=True, fixed_points=P.num_vertices, betti=fh_vectors(P).h
    )


def lift_coloring(coloring: Coloring) -> VectorColoring:
    """Send color i to the i-th standard basis vector."""
    return VectorColoring(
        r=coloring.num_colors, colors=tuple(1 << c for c in coloring.colors)
    )


def vector_coloring_to_json(mu: VectorColoring) -> str:
    """Serialize with colors as bit strings, character j = coordinate j."""
    payload = {
        "r": mu.r,
        "colors": [
            "".join("1" if (c >> j) & 1 else "0" for j in range(mu.r))
            for c in mu.colors
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def vector_coloring_from_json(source: str | Mapping[str, Any]) -> VectorColoring:
    if isinstance(source, str):
        try:
            data = json.loads(source)
        except json.JSONDecodeError as exc:
            raise InvalidInput(f"bad coloring JSON: {exc}") from exc
    else:
        data = source
    if not isinstance(data, Mapping) or "r" not in data or "colors" not in data:
        raise InvalidInput("coloring JSON needs the keys 'r' and 'colors'")
    r = data["r"]
    if not isinstance(r, int):
        raise InvalidInput("'r' must be an integer")
    colors = []
    for i, text in enumerate(data["colors"]):
        if not isinstance(text, str) or len(text) != r or set(text) - {"0", "1"}:
            raise InvalidInput(f"color {i} is not a length-{r} bit string")
        colors.append(sum(1 << j for j, ch in enumerate(text) if ch == "1"))
    return VectorColoring(r=r, colors=tuple(colors))
