"""Binary codes spanned by face indicators, and the structure checks they satisfy.

The code of codimension k collects the indicator vectors of all
codimension-k faces inside GF(2)^num_vertices. The checks in this
module each compute one statement two independent ways and raise
TheoremViolation when the routes disagree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

from .errors import BudgetExceeded, Inapplicable, InvalidInput, TheoremViolation
from .gf2 import (
    BitVector,
    LinearCode,
    SelfDualityTrace,
    dual_code,
    is_self_dual,
    min_distance,
    reduce,
    reed_muller,
    weight_enumerator,
)
from .polytope import (
    Face,
    SimplePolytope,
    face_indicator,
    faces_of_codim,
    fh_vectors,
    is_even,
)
from . import constructors

__all__ = [
    "Coloring",
    "ColorabilityReport",
    "ScreenRule",
    "ScreenVerdict",
    "mallows_sloane",
    "realizability_screen",
    "DimensionLaw",
    "DimensionLawRow",
    "DoublyEvenReport",
    "FaceCode",
    "SelfDualReport",
    "circ_closure_check",
    "code_matrix",
    "colorability_report",
    "coloring_is_proper",
    "dimension_law_check",
    "doubly_even_report",
    "duality_complement_check",
    "face_code",
    "find_coloring",
    "min_distance_bound_check",
    "reed_muller_check",
    "self_duality_report",
]


@dataclass(frozen=True)
class FaceCode:
    """Code of one codimension, with its faces in generator order."""

    polytope: SimplePolytope
    codim: int
    faces: tuple[Face, ...]
    code: LinearCode


@lru_cache(maxsize=None)
def face_code(P: SimplePolytope, k: int) -> FaceCode:
    """Span of the codimension-k face indicators; generator i belongs to faces[i]."""
    faces = faces_of_codim(P, k)
    gens = [face_indicator(P, f) for f in faces]
    return FaceCode(
        polytope=P, codim=k, faces=faces, code=reduce(gens, length=P.num_vertices)
    )


def code_matrix(P: SimplePolytope, k: int) -> list[BitVector]:
    """Incidence matrix rows by vertex; column j is the j-th codimension-k face."""
    faces = faces_of_codim(P, k)
    rows = []
    for v in range(P.num_vertices):
        rows.append(
            BitVector.from_support(
                len(faces), (j for j, f in enumerate(faces) if v in f.vertex_set)
            )
        )
    return rows


@dataclass(frozen=True)
class Coloring:
    """Facet coloring; colors[i] is the color of facet i."""

    num_colors: int
    colors: tuple[int, ...]


def coloring_is_proper(P: SimplePolytope, coloring: Coloring) -> bool:
    """Every vertex must see dim distinct facet colors."""
    if len(coloring.colors) != P.num_facets:
        raise InvalidInput("coloring length does not match the facet count")
    return all(
        len({coloring.colors[i] for i in fs}) == P.dim for fs in P.vertex_facets
    )


def find_coloring(P: SimplePolytope) -> Coloring | None:
    """Backtracking search for a proper coloring of facets with dim colors.

    Facets are adjacent when their vertex sets meet. Facets are
    processed in index order and colors tried ascending, so the first
    facet always receives color 0 and the output is canonical.
    """
    n, m = P.dim, P.num_facets
    adjacent: list[list[int]] = [[] for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            if P.facets[i] & P.facets[j]:
                adjacent[i].append(j)
                adjacent[j].append(i)
    colors = [-1] * m

    def extend(i: int) -> bool:
        if i == m:
            return True
        used = {colors[j] for j in adjacent[i] if colors[j] >= 0}
        for c in range(n):
            if c in used:
                continue
            colors[i] = c
            if extend(i + 1):
                return True
        colors[i] = -1
        return False

    if not extend(0):
        return None
    found = Coloring(num_colors=n, colors=tuple(colors))
    if not coloring_is_proper(P, found):
        raise TheoremViolation("backtracking produced an improper coloring")
    return found


def _perfect_cover_partition(P: SimplePolytope, coloring: Coloring | None) -> bool:
    # Each color class must partition the vertex set, i.e. be a perfect
    # facet cover: disjoint facets whose indicators sum to the all-ones vector.
    if coloring is None:
        return False
    for c in range(coloring.num_colors):
        members = [P.facets[i] for i in range(P.num_facets) if coloring.colors[i] == c]
        total = sum(len(f) for f in members)
        union: set[int] = set().union(*members) if members else set()
        if total != P.num_vertices or len(union) != P.num_vertices:
            return False
    return True


@dataclass(frozen=True)
class ColorabilityReport:
    colorable: bool
    coloring: Coloring | None
    degenerate_dimension: bool
    criteria: dict[str, bool] | None


def colorability_report(P: SimplePolytope) -> ColorabilityReport:
    """Evaluate the six equivalent colorability criteria and assert agreement.

    Below dimension 3 the equivalences break down (odd polygons satisfy
    the dimension formula without being 2-colorable), so only the direct
    search runs and the report carries a degenerate-dimension flag.
    """
    coloring = find_coloring(P)
    if P.dim < 3:
        return ColorabilityReport(
            colorable=coloring is not None,
            coloring=coloring,
            degenerate_dimension=True,
            criteria=None,
        )
    n = P.dim
    codes = [face_code(P, k).code for k in range(n + 1)]
    criteria = {
        "coloring_found": coloring is not None,
        "perfect_cover_partition": _perfect_cover_partition(P, coloring),
        "inclusion_chain": all(
            codes[k].is_subspace_of(codes[k + 1]) for k in range(n)
        ),
        "penultimate_inclusion": codes[n - 2].is_subspace_of(codes[n - 1]),
        "first_code_dimension": codes[1].dim == P.num_facets - n + 1,
        "even_two_faces": is_even(P),
    }
    values = set(criteria.values())
    if len(values) != 1:
        raise TheoremViolation(f"colorability criteria disagree: {criteria}")
    return ColorabilityReport(
        colorable=values.pop(),
        coloring=coloring,
        degenerate_dimension=False,
        criteria=criteria,
    )


@dataclass(frozen=True)
class DimensionLawRow:
    codim: int
    dim: int
    partial_h_sum: int
    self_dual: bool


@dataclass(frozen=True)
class DimensionLaw:
    rows: tuple[DimensionLawRow, ...]
    self_dual_codims: tuple[int, ...]


def dimension_law_check(P: SimplePolytope) -> DimensionLaw:
    """For even P: dim of each face code must equal the partial h-sum.

    Also asserts where self-duality can occur: at codimension (n-1)/2
    for odd n and nowhere for even n.
    """
    if not is_even(P):
        raise Inapplicable("dimension law requires an even polytope")
    n = P.dim
    h = fh_vectors(P).h
    rows = []
    for k in range(n + 1):
        code = face_code(P, k).code
        partial = sum(h[: k + 1])
        if code.dim != partial:
            raise TheoremViolation(
                f"dim of codimension-{k} code is {code.dim}, expected {partial}"
            )
        rows.append(
            DimensionLawRow(
                codim=k,
                dim=code.dim,
                partial_h_sum=partial,
                self_dual=is_self_dual(code).self_dual,
            )
        )
    self_dual_codims = tuple(r.codim for r in rows if r.self_dual)
    expected = ((n - 1) // 2,) if n % 2 == 1 else ()
    if self_dual_codims != expected:
        raise TheoremViolation(
            f"self-dual codimensions {self_dual_codims}, expected {expected}"
        )
    return DimensionLaw(rows=tuple(rows), self_dual_codims=self_dual_codims)


@dataclass(frozen=True)
class SelfDualReport:
    codim: int
    self_dual: bool
    half_dimension: bool
    face_parity_ok: bool
    parity_by_codim: tuple[tuple[int, bool], ...]
    trace: SelfDualityTrace


def self_duality_report(P: SimplePolytope, k: int) -> SelfDualReport:
    """Test self-duality of the codimension-k code two ways.

    Route one is the direct comparison with the dual; route two demands
    half dimension plus even vertex counts on every face of codimension
    k through 2k (faces beyond codimension n do not exist, and reaching
    the vertices themselves makes the parity condition fail). The two
    routes must agree. A self-dual verdict in dimension >= 3 must also
    come with the all-ones vector in the code and 0 < 2k < n.
    """
    if not 0 <= k <= P.dim:
        raise InvalidInput(f"codimension {k} out of range 0..{P.dim}")
    n = P.dim
    fc = face_code(P, k)
    trace = is_self_dual(fc.code)
    half = P.num_vertices % 2 == 0 and 2 * fc.code.dim == P.num_vertices
    parity_rows = []
    for codim in range(k, min(2 * k, n) + 1):
        parity_rows.append(
            (codim, all(f.num_vertices % 2 == 0 for f in faces_of_codim(P, codim)))
        )
    parity_ok = all(ok for _, ok in parity_rows)
    if 2 * k > n:
        # The parity range is cut off at the vertices, whose count of 1 is odd.
        parity_ok = False
    if (half and parity_ok) != trace.self_dual:
        raise TheoremViolation(
            f"self-duality routes disagree at codimension {k}: "
            f"half={half} parity={parity_ok} direct={trace.self_dual}"
        )
    if trace.self_dual and n >= 3:
        if not fc.code.contains(BitVector.ones(P.num_vertices)):
            raise TheoremViolation("self-dual face code without the all-ones vector")
        if not 0 < 2 * k < n:
            raise TheoremViolation(f"self-dual face code at impossible codimension {k}")
    return SelfDualReport(
        codim=k,
        self_dual=trace.self_dual,
        half_dimension=half,
        face_parity_ok=parity_ok,
        parity_by_codim=tuple(parity_rows),
        trace=trace,
    )


def duality_complement_check(P: SimplePolytope) -> bool:
    """For even P: the dual of each code is the code of complementary codimension."""
    if not is_even(P):
        raise Inapplicable("duality complement requires an even polytope")
    n = P.dim
    return all(
        dual_code(face_code(P, k).code) == face_code(P, n - 1 - k).code
        for k in range(n)
    )


def circ_closure_check(P: SimplePolytope, k: int) -> bool:
    """Products of k facet indicators must span the codimension-k code.

    Componentwise products distribute over sums, so running over all
    k-multisets of facet indicators spans every k-fold product of code
    elements.
    """
    if not is_even(P):
        raise Inapplicable("product closure requires an even polytope")
    if not 1 <= k <= P.dim:
        raise InvalidInput(f"codimension {k} out of range 1..{P.dim}")
    indicators = [
        BitVector.from_support(P.num_vertices, f) for f in P.facets
    ]
    products = []
    for combo in combinations_with_replacement(range(P.num_facets), k):
        bits = indicators[combo[0]]
        for i in combo[1:]:
            bits = bits & indicators[i]
        products.append(bits)
    return reduce(products, length=P.num_vertices) == face_code(P, k).code


def min_distance_bound_check(P: SimplePolytope) -> tuple[int, int]:
    """Face-size bound versus exact minimum distance at the self-dual codimension.

    For even P of odd dimension n, the minimum distance of the
    codimension-(n-1)/2 code is at most the smallest vertex count among
    faces of that codimension, and in dimension 3 it is exactly 4.
    Returns (bound, exact).
    """
    if not is_even(P) or P.dim % 2 == 0:
        raise Inapplicable("the distance bound applies to even polytopes of odd dimension")
    k = (P.dim - 1) // 2
    bound = min(f.num_vertices for f in faces_of_codim(P, k))
    exact = min_distance(face_code(P, k).code)
    if exact > bound:
        raise TheoremViolation(f"minimum distance {exact} exceeds the face bound {bound}")
    if P.dim == 3 and exact != 4:
        raise TheoremViolation(f"3-polytope code has distance {exact}, expected 4")
    return bound, exact


@dataclass(frozen=True)
class DoublyEvenReport:
    codim: int
    doubly_even: bool
    face_sizes_divisible_by_4: bool


def doubly_even_report(P: SimplePolytope) -> DoublyEvenReport:
    """Doubly-evenness of the self-dual-codimension code, checked two ways.

    For even P with dim = 2k+1 the code of codimension k is doubly even
    exactly when every codimension-k face has vertex count divisible by
    4; that route must agree with the weight enumerator.
    """
    if not is_even(P) or P.dim % 2 == 0:
        raise Inapplicable("the doubly-even criterion applies to even polytopes of odd dimension")
    k = (P.dim - 1) // 2
    by_faces = all(f.num_vertices % 4 == 0 for f in faces_of_codim(P, k))
    by_weights = weight_enumerator(face_code(P, k).code).doubly_even
    if by_faces != by_weights:
        raise TheoremViolation(
            f"doubly-even routes disagree: faces={by_faces} weights={by_weights}"
        )
    return DoublyEvenReport(codim=k, doubly_even=by_weights, face_sizes_divisible_by_4=by_faces)


def reed_muller_check(k: int) -> bool:
    """Whether the codimension-k code of cube(2k+1) equals RM(k, 2k+1)."""
    if k < 1:
        raise InvalidInput(f"order must be >= 1, got {k}")
    if 2 * k + 1 > 5:
        raise BudgetExceeded(f"cube dimension {2 * k + 1} over the comparison budget 5")
    P = constructors.cube(2 * k + 1)
    return face_code(P, k).code == reed_muller(k, 2 * k + 1)


# The realizability screen lives in its own module but belongs to this
# namespace; the import sits last so the screen can call back into the
# face-code machinery at run time.
from .screen import (  # noqa: E402
    ScreenRule,
    ScreenVerdict,
    mallows_sloane,
    realizability_screen,
)
