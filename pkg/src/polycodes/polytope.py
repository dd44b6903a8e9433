"""Simple polytopes presented by vertex-facet incidence.

A polytope of dimension n is stored as the tuple of its facets, each a
frozenset of vertex indices. Validation covers the local combinatorics
of simplicity (n facets and n edge neighbors per vertex, connected
skeleton). Global polytopality of abstract incidence data is not
decided here; inputs passing the local checks are processed and the
CLI reports them as ``polytopality: unverified``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Mapping, Sequence

from .errors import InvalidInput, InvalidPolytope, TheoremViolation
from .gf2 import BitVector

__all__ = [
    "FHVectors",
    "Face",
    "OutwardMap",
    "POLYTOPALITY_NOTE",
    "SimplePolytope",
    "check_incidence",
    "edges",
    "face_indicator",
    "faces_of_codim",
    "fh_vectors",
    "incidence_isomorphic",
    "is_even",
    "outward_neighbor_map",
    "polytope_from_json",
    "polytope_to_json",
    "polytope_to_json_dict",
    "skeleton_connected",
    "validate",
    "vertex_neighbors",
]

POLYTOPALITY_NOTE = "unverified (local simplicity checks only)"


@dataclass(frozen=True)
class SimplePolytope:
    """Validated vertex-facet incidence of a simple n-polytope."""

    dim: int
    facets: tuple[frozenset[int], ...]
    num_vertices: int
    vertex_facets: tuple[frozenset[int], ...]
    coords: tuple[tuple[Fraction, ...], ...] | None = None
    name: str | None = None

    @property
    def num_facets(self) -> int:
        return len(self.facets)

    def vertices(self) -> range:
        return range(self.num_vertices)


@dataclass(frozen=True)
class Face:
    """Face of codimension ``codim``, identified by its defining facets."""

    codim: int
    defining_facets: tuple[int, ...]
    vertex_set: frozenset[int]

    @property
    def num_vertices(self) -> int:
        return len(self.vertex_set)


@dataclass(frozen=True)
class FHVectors:
    """Face counts by codimension (f[0] = 1 for the whole polytope) and the h-vector."""

    f: tuple[int, ...]
    h: tuple[int, ...]


def _normalize_facets(facets: Iterable[Iterable[int]]) -> tuple[frozenset[int], ...]:
    out = []
    for fac in facets:
        fs = frozenset(fac)
        for v in fs:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise InvalidInput(f"vertex indices must be nonnegative integers, got {v!r}")
        out.append(fs)
    return tuple(out)


def _normalize_coords(
    coords: Sequence[Sequence[object]], dim: int, num_vertices: int
) -> tuple[tuple[Fraction, ...], ...] | list[str]:
    violations = []
    if len(coords) != num_vertices:
        return [f"coords has {len(coords)} points for {num_vertices} vertices"]
    points = []
    for i, point in enumerate(coords):
        if len(point) != dim:
            violations.append(f"coords[{i}] has {len(point)} entries, expected {dim}")
            continue
        row = []
        for x in point:
            if isinstance(x, Fraction):
                row.append(x)
            elif isinstance(x, int) and not isinstance(x, bool):
                row.append(Fraction(x))
            else:
                violations.append(f"coords[{i}] entry {x!r} is not rational")
                break
        else:
            points.append(tuple(row))
    if violations:
        return violations
    return tuple(points)


def check_incidence(
    dim: int,
    facets: Iterable[Iterable[int]],
    coords: Sequence[Sequence[object]] | None = None,
) -> list[str]:
    """Return the list of violated local simplicity checks (empty when valid)."""
    violations: list[str] = []
    if not isinstance(dim, int) or dim < 1:
        return [f"dimension must be a positive integer, got {dim!r}"]
    try:
        fsets = _normalize_facets(facets)
    except InvalidInput as exc:
        return [str(exc)]
    m = len(fsets)
    if m < dim + 1:
        violations.append(f"a {dim}-polytope needs at least {dim + 1} facets, got {m}")
    if any(not f for f in fsets):
        violations.append("facets must be nonempty")
        return violations
    if not fsets:
        return violations or ["no facets given"]

    all_vertices = set().union(*fsets)
    num_vertices = max(all_vertices) + 1 if all_vertices else 0
    missing = sorted(set(range(num_vertices)) - all_vertices)
    if missing:
        violations.append(f"vertex indices must cover 0..{num_vertices - 1}; missing {missing}")
        return violations

    vertex_facets = [frozenset(i for i, f in enumerate(fsets) if v in f) for v in range(num_vertices)]
    bad_counts = [v for v in range(num_vertices) if len(vertex_facets[v]) != dim]
    if bad_counts:
        v = bad_counts[0]
        violations.append(
            f"every vertex must lie in exactly {dim} facets; "
            f"vertex {v} lies in {len(vertex_facets[v])} ({len(bad_counts)} offender(s))"
        )
    seen: dict[frozenset[int], int] = {}
    for v, fs in enumerate(vertex_facets):
        if fs in seen:
            violations.append(f"vertices {seen[fs]} and {v} lie in the same facet set")
            break
        seen[fs] = v
    if violations:
        return violations

    # Each (dim-1)-subset of a vertex's facets must be shared with exactly
    # one other vertex; this pins down the n edges at every vertex.
    neighbor_sets: list[set[int]] = [set() for _ in range(num_vertices)]
    everything = frozenset(range(num_vertices))
    bad_edges = 0
    for v in range(num_vertices):
        for dropped in sorted(vertex_facets[v]):
            rest = vertex_facets[v] - {dropped}
            shared = everything
            for i in rest:
                shared = shared & fsets[i]
            others = shared - {v}
            if len(others) == 1:
                neighbor_sets[v].add(next(iter(others)))
            else:
                bad_edges += 1
                if bad_edges <= 5:
                    violations.append(
                        f"vertex {v} shares facets {sorted(rest)} with "
                        f"{len(others)} other vertices, expected exactly 1"
                    )
    if bad_edges > 5:
        violations.append(f"({bad_edges - 5} further edge violations suppressed)")
    if violations:
        return violations

    # Connectivity of the 1-skeleton.
    todo = [0]
    reached = {0}
    while todo:
        v = todo.pop()
        for w in neighbor_sets[v]:
            if w not in reached:
                reached.add(w)
                todo.append(w)
    if len(reached) != num_vertices:
        violations.append(f"1-skeleton is disconnected ({len(reached)} of {num_vertices} reachable)")

    if coords is not None:
        normalized = _normalize_coords(coords, dim, num_vertices)
        if isinstance(normalized, list):
            violations.extend(normalized)
    return violations


def validate(
    dim: int,
    facets: Iterable[Iterable[int]],
    coords: Sequence[Sequence[object]] | None = None,
    name: str | None = None,
) -> SimplePolytope:
    """Build a SimplePolytope, raising InvalidPolytope with every violated check."""
    facets = [list(f) for f in facets]
    violations = check_incidence(dim, facets, coords)
    if violations:
        raise InvalidPolytope(violations)
    fsets = _normalize_facets(facets)
    num_vertices = max(set().union(*fsets)) + 1
    vertex_facets = tuple(
        frozenset(i for i, f in enumerate(fsets) if v in f) for v in range(num_vertices)
    )
    norm_coords = None
    if coords is not None:
        normalized = _normalize_coords(coords, dim, num_vertices)
        assert not isinstance(normalized, list)
        norm_coords = normalized
    return SimplePolytope(
        dim=dim,
        facets=fsets,
        num_vertices=num_vertices,
        vertex_facets=vertex_facets,
        coords=norm_coords,
        name=name,
    )


@lru_cache(maxsize=None)
def vertex_neighbors(P: SimplePolytope) -> tuple[tuple[int, ...], ...]:
    """Adjacency lists of the 1-skeleton, each sorted ascending."""
    n = P.dim
    nbrs: list[list[int]] = [[] for _ in range(P.num_vertices)]
    for u in range(P.num_vertices):
        for w in range(u + 1, P.num_vertices):
            if len(P.vertex_facets[u] & P.vertex_facets[w]) == n - 1:
                nbrs[u].append(w)
                nbrs[w].append(u)
    return tuple(tuple(sorted(x)) for x in nbrs)


@lru_cache(maxsize=None)
def edges(P: SimplePolytope) -> tuple[tuple[int, int], ...]:
    """Vertex pairs sharing exactly dim - 1 facets, sorted."""
    out = []
    for u, nbrs in enumerate(vertex_neighbors(P)):
        out.extend((u, w) for w in nbrs if u < w)
    return tuple(sorted(out))


def skeleton_connected(P: SimplePolytope, removed: frozenset[int] = frozenset()) -> bool:
    """Whether the 1-skeleton minus ``removed`` is connected (and nonempty)."""
    alive = [v for v in range(P.num_vertices) if v not in removed]
    if not alive:
        return False
    nbrs = vertex_neighbors(P)
    reached = {alive[0]}
    todo = [alive[0]]
    while todo:
        v = todo.pop()
        for w in nbrs[v]:
            if w not in removed and w not in reached:
                reached.add(w)
                todo.append(w)
    return len(reached) == len(alive)


@lru_cache(maxsize=None)
def faces_of_codim(P: SimplePolytope, k: int) -> tuple[Face, ...]:
    """All codimension-k faces, ordered by their defining facet tuples.

    Candidates are the k-subsets of facets through each vertex; the
    vertex set of a face is the exact intersection of its defining
    facets. Codimension 0 is the polytope itself with no defining
    facets, codimension n has one face per vertex.
    """
    if not 0 <= k <= P.dim:
        raise InvalidInput(f"codimension {k} out of range 0..{P.dim}")
    if k == 0:
        return (Face(0, (), frozenset(range(P.num_vertices))),)
    candidates: set[tuple[int, ...]] = set()
    for fs in P.vertex_facets:
        candidates.update(combinations(sorted(fs), k))
    out = []
    for defining in sorted(candidates):
        vs = P.facets[defining[0]]
        for i in defining[1:]:
            vs = vs & P.facets[i]
        out.append(Face(codim=k, defining_facets=defining, vertex_set=vs))
    return tuple(out)


def face_indicator(P: SimplePolytope, face: Face) -> BitVector:
    """Indicator vector of the face's vertex set in GF(2)^num_vertices."""
    return BitVector.from_support(P.num_vertices, face.vertex_set)


@lru_cache(maxsize=None)
def fh_vectors(P: SimplePolytope) -> FHVectors:
    """Face counts by codimension and the h-vector.

    h is recovered from sum_i f_i (t-1)^(n-i) = sum_i h_i t^(n-i) with
    exact integer arithmetic; its symmetry is asserted.
    """
    n = P.dim
    f = tuple(len(faces_of_codim(P, k)) for k in range(n + 1))
    h = []
    for i in range(n + 1):
        acc = 0
        for j in range(i + 1):
            acc += f[j] * comb(n - j, n - i) * (-1) ** (i - j)
        h.append(acc)
    if h != h[::-1]:
        raise TheoremViolation(
            f"h-vector {tuple(h)} is not symmetric; "
            "the incidence data cannot come from a simple polytope"
        )
    return FHVectors(f=f, h=tuple(h))


@dataclass(frozen=True)
class OutwardMap:
    """Per-facet map sending each vertex of the facet to its unique neighbor outside."""

    facet: int
    pairs: tuple[tuple[int, int], ...]
    injective: bool
    image_is_complement: bool

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)


def outward_neighbor_map(P: SimplePolytope, facet_index: int) -> OutwardMap:
    """For facet F, map each v in F to its unique edge neighbor not in F."""
    if not 0 <= facet_index < P.num_facets:
        raise InvalidInput(f"facet index {facet_index} out of range")
    fac = P.facets[facet_index]
    nbrs = vertex_neighbors(P)
    pairs = []
    for v in sorted(fac):
        outside = [w for w in nbrs[v] if facet_index not in P.vertex_facets[w]]
        if len(outside) != 1:
            raise TheoremViolation(
                f"vertex {v} of facet {facet_index} has {len(outside)} outward neighbors"
            )
        pairs.append((v, outside[0]))
    image = {w for _, w in pairs}
    complement = set(range(P.num_vertices)) - fac
    return OutwardMap(
        facet=facet_index,
        pairs=tuple(pairs),
        injective=len(image) == len(pairs),
        image_is_complement=image == complement,
    )


def is_even(P: SimplePolytope) -> bool:
    """Whether every 2-face has an even vertex count.

    In dimension 2 this is evenness of the vertex count itself and in
    dimension 1 it holds by convention.
    """
    if P.dim == 1:
        return True
    if P.dim == 2:
        return P.num_vertices % 2 == 0
    return all(f.num_vertices % 2 == 0 for f in faces_of_codim(P, P.dim - 2))


def _facet_profile(facets: Sequence[frozenset[int]], i: int) -> tuple:
    sizes = sorted(len(facets[i] & facets[j]) for j in range(len(facets)) if j != i)
    return (len(facets[i]), tuple(sizes))


def incidence_isomorphic(P: SimplePolytope, Q: SimplePolytope) -> bool:
    """Whether some facet bijection carries the incidence of P onto Q."""
    if (P.dim, P.num_facets, P.num_vertices) != (Q.dim, Q.num_facets, Q.num_vertices):
        return False
    m = P.num_facets
    p_prof = [_facet_profile(P.facets, i) for i in range(m)]
    q_prof = [_facet_profile(Q.facets, i) for i in range(m)]
    if sorted(p_prof) != sorted(q_prof):
        return False
    q_vertex_by_facets = {fs: v for v, fs in enumerate(Q.vertex_facets)}
    assignment: list[int] = []
    used = [False] * m

    def vertex_map_exists() -> bool:
        seen = set()
        for fs in P.vertex_facets:
            image = frozenset(assignment[i] for i in fs)
            w = q_vertex_by_facets.get(image)
            if w is None or w in seen:
                return False
            seen.add(w)
        return True

    def extend(i: int) -> bool:
        if i == m:
            return vertex_map_exists()
        for j in range(m):
            if used[j] or p_prof[i] != q_prof[j]:
                continue
            if any(
                len(P.facets[i] & P.facets[a]) != len(Q.facets[j] & Q.facets[assignment[a]])
                for a in range(i)
            ):
                continue
            assignment.append(j)
            used[j] = True
            if extend(i + 1):
                return True
            assignment.pop()
            used[j] = False
        return False

    return extend(0)


def polytope_to_json_dict(P: SimplePolytope) -> dict:
    out: dict = {
        "dim": P.dim,
        "facets": [sorted(f) for f in P.facets],
    }
    if P.coords is not None:
        out["coords"] = [[str(x) for x in point] for point in P.coords]
    if P.name is not None:
        out["name"] = P.name
    return out


def polytope_to_json(P: SimplePolytope) -> str:
    return json.dumps(polytope_to_json_dict(P), indent=2) + "\n"


def polytope_from_json(source: str | Mapping) -> SimplePolytope:
    """Parse the polytope JSON format (dim, facets, optional coords and name)."""
    if isinstance(source, str):
        try:
            data = json.loads(source)
        except json.JSONDecodeError as exc:
            raise InvalidInput(f"not valid JSON: {exc}") from exc
    else:
        data = source
    if not isinstance(data, Mapping):
        raise InvalidInput("polytope JSON must be an object")
    if "dim" not in data or "facets" not in data:
        raise InvalidInput("polytope JSON needs 'dim' and 'facets'")
    dim = data["dim"]
    facets = data["facets"]
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise InvalidInput("'facets' must be a list of lists of vertex indices")
    coords = None
    if data.get("coords") is not None:
        raw = data["coords"]
        if not isinstance(raw, list) or not all(isinstance(p, list) for p in raw):
            raise InvalidInput("'coords' must be a list of coordinate lists")
        coords = []
        for point in raw:
            row = []
            for x in point:
                try:
                    row.append(Fraction(x) if isinstance(x, (str, int)) else None)
                except (ValueError, ZeroDivisionError) as exc:
                    raise InvalidInput(f"bad rational {x!r}: {exc}") from exc
                if row[-1] is None:
                    raise InvalidInput(f"coordinate {x!r} is not a rational string")
            coords.append(row)
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise InvalidInput("'name' must be a string")
    return validate(dim, facets, coords=coords, name=name)
