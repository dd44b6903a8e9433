"""Shared oracles and hypothesis strategies.

Oracles here deliberately avoid the library's own algorithms: spans are
enumerated by subset XOR, h-vectors come from literal polynomial
multiplication, faces from global subset intersections. Frozen golden
values in the test files were produced by these oracles.
"""

from __future__ import annotations

import itertools
import random

from hypothesis import strategies as st

import polycodes as pc


def xor_span(bits: list[int]) -> set[int]:
    span = {0}
    for v in bits:
        span |= {s ^ v for s in span}
    return span


def all_codewords(code: pc.LinearCode) -> set[int]:
    return xor_span([b.bits for b in code.basis])


def brute_min_distance(code: pc.LinearCode) -> int:
    return min(bin(w).count("1") for w in all_codewords(code) if w)


def brute_weight_counts(code: pc.LinearCode) -> dict[int, int]:
    counts: dict[int, int] = {}
    for w in all_codewords(code):
        wt = bin(w).count("1")
        counts[wt] = counts.get(wt, 0) + 1
    return dict(sorted(counts.items()))


def faces_by_global_intersection(
    P: pc.SimplePolytope, k: int
) -> dict[tuple[int, ...], frozenset[int]]:
    """All codimension-k faces as {defining facet tuple: vertex set}.

    A subset counts as a face exactly when its intersection is nonempty
    and no other facet contains that intersection.
    """
    faces = {}
    for subset in itertools.combinations(range(P.num_facets), k):
        vs = set(range(P.num_vertices))
        for i in subset:
            vs &= P.facets[i]
        if not vs:
            continue
        containing = frozenset(
            i for i in range(P.num_facets) if vs <= P.facets[i]
        )
        if containing == frozenset(subset):
            faces[subset] = frozenset(vs)
    return faces


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def h_from_f_by_polynomial(f: tuple[int, ...]) -> tuple[int, ...]:
    """Expand sum_i f[i] * (t-1)^(n-i) and read off descending coefficients."""
    n = len(f) - 1
    total = [0] * (n + 1)
    for i, fi in enumerate(f):
        p = [1]
        for _ in range(n - i):
            p = _poly_mul(p, [-1, 1])
        for j, c in enumerate(p):
            total[j] += fi * c
    return tuple(total[n - i] for i in range(n + 1))


def random_self_dual_code(rng: random.Random, length: int) -> pc.LinearCode:
    """Seeded self-dual code: start from coordinate pairs, mix by neighbor steps.

    Replacing a code C with span((C intersect v-perp) + v) for an
    even-weight v outside C preserves self-duality.
    """
    assert length % 2 == 0 and length >= 2
    gens = [pc.BitVector.from_support(length, (2 * i, 2 * i + 1)) for i in range(length // 2)]
    code = pc.reduce(gens, length=length)
    for _ in range(8):
        v = pc.BitVector(length, rng.getrandbits(length))
        if v.weight % 2 == 1:
            v = v + pc.BitVector.from_support(length, (rng.randrange(length),))
        if v.is_zero or code.contains(v):
            continue
        pairing = [pc.inner(b, v) for b in code.basis]
        pivot = pairing.index(1)
        mixed = [
            b if hit == 0 else b + code.basis[pivot]
            for b, hit in zip(code.basis, pairing)
        ]
        mixed[pivot] = v
        code = pc.reduce(mixed, length=length)
        assert 2 * code.dim == length
    return code


@st.composite
def bitvectors(draw, max_length: int = 24) -> pc.BitVector:
    length = draw(st.integers(1, max_length))
    return pc.BitVector(length, draw(st.integers(0, 2**length - 1)))


@st.composite
def bitvector_pairs(draw, max_length: int = 24) -> tuple[pc.BitVector, pc.BitVector]:
    length = draw(st.integers(1, max_length))
    bits = st.integers(0, 2**length - 1)
    return pc.BitVector(length, draw(bits)), pc.BitVector(length, draw(bits))


@st.composite
def linear_codes(draw, max_length: int = 16, max_generators: int = 6) -> pc.LinearCode:
    length = draw(st.integers(1, max_length))
    raw = draw(
        st.lists(st.integers(0, 2**length - 1), min_size=0, max_size=max_generators)
    )
    return pc.reduce([pc.BitVector(length, g) for g in raw], length=length)


_RECIPE_LEAVES = st.sampled_from(
    [
        "segment",
        "simplex 2",
        "simplex 3",
        "polygon 4",
        "polygon 5",
        "cube 2",
        "cube 3",
        "prism 3",
    ]
)

recipe_texts = st.recursive(
    _RECIPE_LEAVES,
    lambda inner: st.builds(lambda a, b: f"product ({a}) ({b})", inner, inner)
    | st.builds(
        # Cutting needs dimension at least 2; the segment is the only 1-dim leaf.
        lambda a: f"vcut ({a}) 0",
        inner.filter(lambda t: t != "segment"),
    ),
    max_leaves=3,
)
