"""Exact linear algebra over GF(2).

Vectors are fixed-length bit strings packed into Python integers
(coordinate i is bit i, so words fill from the little end and the tail
beyond ``length`` is kept zero). Codes are row spaces held in reduced
echelon form, which makes equality of subspaces a tuple comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import BudgetExceeded, InvalidInput, TheoremViolation, Undefined

__all__ = [
    "ENUMERATION_CAP",
    "BitVector",
    "LinearCode",
    "SelfDualityTrace",
    "WeightEnumerator",
    "distance",
    "dual_code",
    "format_matrix",
    "inner",
    "is_self_dual",
    "min_distance",
    "parse_matrix",
    "reduce",
    "reed_muller",
    "weight_enumerator",
]

# Exhaustive codeword enumeration is capped at this dimension.
ENUMERATION_CAP = 28

try:
    _popcount = int.bit_count
except AttributeError:  # Python < 3.11
    def _popcount(x: int) -> int:
        return bin(x).count("1")


@dataclass(frozen=True)
class BitVector:
    """Vector in GF(2)^length; coordinate i is bit i of ``bits``."""

    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.length, int) or self.length < 1:
            raise InvalidInput(f"vector length must be a positive integer, got {self.length!r}")
        if not isinstance(self.bits, int) or self.bits < 0:
            raise InvalidInput(f"bit pattern must be a nonnegative integer, got {self.bits!r}")
        object.__setattr__(self, "bits", self.bits & ((1 << self.length) - 1))

    @classmethod
    def zeros(cls, length: int) -> "BitVector":
        return cls(length, 0)

    @classmethod
    def ones(cls, length: int) -> "BitVector":
        return cls(length, (1 << length) - 1)

    @classmethod
    def from01(cls, text: str) -> "BitVector":
        """Parse a '0'/'1' string; character i is coordinate i."""
        if not text or set(text) - {"0", "1"}:
            raise InvalidInput(f"expected a nonempty string of 0s and 1s, got {text!r}")
        bits = 0
        for i, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << i
        return cls(len(text), bits)

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "BitVector":
        bits = 0
        for i in support:
            if not 0 <= i < length:
                raise InvalidInput(f"coordinate {i} out of range for length {length}")
            bits |= 1 << i
        return cls(length, bits)

    @property
    def weight(self) -> int:
        return _popcount(self.bits)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.length) if (self.bits >> i) & 1)

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    def to01(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.length))

    def _check_same_length(self, other: "BitVector") -> None:
        if self.length != other.length:
            raise InvalidInput(f"length mismatch: {self.length} vs {other.length}")

    def __add__(self, other: "BitVector") -> "BitVector":
        if not isinstance(other, BitVector):
            return NotImplemented
        self._check_same_length(other)
        return BitVector(self.length, self.bits ^ other.bits)

    def __and__(self, other: "BitVector") -> "BitVector":
        """Componentwise product, the idempotent AND of supports."""
        if not isinstance(other, BitVector):
            return NotImplemented
        self._check_same_length(other)
        return BitVector(self.length, self.bits & other.bits)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __len__(self) -> int:
        return self.length

    def __iter__(self) -> Iterator[int]:
        return ((self.bits >> i) & 1 for i in range(self.length))

    def __str__(self) -> str:
        return self.to01()


def inner(u: BitVector, v: BitVector) -> int:
    """Standard bilinear form, the parity of the common support."""
    u._check_same_length(v)
    return _popcount(u.bits & v.bits) & 1


def distance(u: BitVector, v: BitVector) -> int:
    u._check_same_length(v)
    return _popcount(u.bits ^ v.bits)


@dataclass(frozen=True, eq=False)
class LinearCode:
    """Row space of ``generators`` inside GF(2)^length.

    ``basis`` is in reduced echelon form: rows sorted by pivot (the
    lowest set bit) and every pivot cleared from the other rows. Equal
    subspaces therefore carry identical bases, and ``==`` compares them.
    """

    length: int
    generators: tuple[BitVector, ...]
    basis: tuple[BitVector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: BitVector) -> bool:
        if v.length != self.length:
            raise InvalidInput(f"length mismatch: {v.length} vs {self.length}")
        r = v.bits
        for row in self.basis:
            p = (row.bits & -row.bits).bit_length() - 1
            if (r >> p) & 1:
                r ^= row.bits
        return r == 0

    def is_subspace_of(self, other: "LinearCode") -> bool:
        return all(other.contains(b) for b in self.basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.length == other.length and tuple(b.bits for b in self.basis) == tuple(
            b.bits for b in other.basis
        )

    def __hash__(self) -> int:
        return hash((self.length, tuple(b.bits for b in self.basis)))


def reduce(generators: Iterable[BitVector], *, length: int | None = None) -> LinearCode:
    """Gaussian elimination to the canonical reduced echelon basis.

    ``length`` is only required when ``generators`` is empty.
    """
    gens = tuple(generators)
    if length is None:
        if not gens:
            raise InvalidInput("length is required for an empty generator set")
        length = gens[0].length
    for g in gens:
        if g.length != length:
            raise InvalidInput(f"generator of length {g.length} in a code of length {length}")
    pivot_rows: dict[int, int] = {}
    for g in gens:
        r = g.bits
        for p, row in pivot_rows.items():
            if (r >> p) & 1:
                r ^= row
        if r:
            p = (r & -r).bit_length() - 1
            for q, row in pivot_rows.items():
                if (row >> p) & 1:
                    pivot_rows[q] = row ^ r
            pivot_rows[p] = r
    basis = tuple(BitVector(length, pivot_rows[p]) for p in sorted(pivot_rows))
    return LinearCode(length=length, generators=gens, basis=basis)


def dual_code(code: LinearCode) -> LinearCode:
    """Orthogonal complement, read off the echelon basis of ``code``."""
    n = code.length
    pivots = [(row.bits & -row.bits).bit_length() - 1 for row in code.basis]
    pivot_set = set(pivots)
    null_rows = []
    for j in range(n):
        if j in pivot_set:
            continue
        bits = 1 << j
        for p, row in zip(pivots, code.basis):
            if (row.bits >> j) & 1:
                bits |= 1 << p
        null_rows.append(BitVector(n, bits))
    dual = reduce(null_rows, length=n)
    if dual.dim + code.dim != n:
        raise TheoremViolation("rank plus nullity must equal the length")
    return dual


@dataclass(frozen=True)
class SelfDualityTrace:
    """Outcome of the direct self-duality test plus the two pairwise criteria."""

    self_dual: bool          # C equals its dual, the defining test
    half_dimension: bool     # dim == length / 2
    basis_orthogonal: bool   # every basis pair (diagonal included) is orthogonal
    products_even_weight: bool  # every componentwise basis product has even weight


def is_self_dual(code: LinearCode) -> SelfDualityTrace:
    """Compare C with its dual and evaluate the pairwise criteria.

    When dim == length/2 the three answers must coincide; disagreement
    raises TheoremViolation.
    """
    direct = code == dual_code(code)
    half = 2 * code.dim == code.length
    b = code.basis
    pairs = [(i, j) for i in range(len(b)) for j in range(i, len(b))]
    orthogonal = all(inner(b[i], b[j]) == 0 for i, j in pairs)
    products_even = all((b[i] & b[j]).weight % 2 == 0 for i, j in pairs)
    if half and not (direct == orthogonal == products_even):
        raise TheoremViolation(
            "self-duality criteria disagree at half dimension: "
            f"direct={direct} orthogonal={orthogonal} products_even={products_even}"
        )
    return SelfDualityTrace(direct, half, orthogonal, products_even)


def _nonzero_weights(code: LinearCode) -> Iterator[int]:
    # Gray-code walk: step i flips the row indexed by the lowest set bit of i,
    # visiting every nonzero codeword exactly once.
    rows = [row.bits for row in code.basis]
    acc = 0
    pc = _popcount
    for i in range(1, 1 << len(rows)):
        acc ^= rows[(i & -i).bit_length() - 1]
        yield pc(acc)


def min_distance(code: LinearCode) -> int:
    """Exact minimum distance by exhaustive enumeration.

    Raises Undefined for the zero code and BudgetExceeded above
    dimension ENUMERATION_CAP.
    """
    if code.dim == 0:
        raise Undefined("the zero code has no nonzero codeword")
    if code.dim > ENUMERATION_CAP:
        raise BudgetExceeded(f"dimension {code.dim} over the enumeration cap {ENUMERATION_CAP}")
    return min(_nonzero_weights(code))


@dataclass(frozen=True)
class WeightEnumerator:
    counts: dict[int, int]
    doubly_even: bool


def weight_enumerator(code: LinearCode) -> WeightEnumerator:
    """Weight distribution by exhaustive enumeration.

    ``doubly_even`` is checked twice: every enumerated weight divisible
    by 4, and the basis route (basis weights divisible by 4 plus
    pairwise orthogonality). The two must agree.
    """
    if code.dim > ENUMERATION_CAP:
        raise BudgetExceeded(f"dimension {code.dim} over the enumeration cap {ENUMERATION_CAP}")
    counts: dict[int, int] = {0: 1}
    for w in _nonzero_weights(code):
        counts[w] = counts.get(w, 0) + 1
    enumerated = all(w % 4 == 0 for w in counts)
    b = code.basis
    by_basis = all(row.weight % 4 == 0 for row in b) and all(
        inner(b[i], b[j]) == 0 for i in range(len(b)) for j in range(i + 1, len(b))
    )
    if enumerated != by_basis:
        raise TheoremViolation(
            f"doubly-even routes disagree: enumerated={enumerated} basis={by_basis}"
        )
    return WeightEnumerator(counts=dict(sorted(counts.items())), doubly_even=enumerated)


def reed_muller(k: int, m: int) -> LinearCode:
    """Reed-Muller code RM(k, m) over the 2^m points in counting order.

    Point j gives variable i the binary digit of weight 2^(m-1-i) of j,
    the same convention that labels cube(m) vertices. Generators are the
    evaluation vectors of all monomials of degree at most k, ordered by
    degree and then by variable tuple.
    """
    if m < 1:
        raise InvalidInput(f"need at least one variable, got m={m}")
    if not 0 <= k <= m:
        raise InvalidInput(f"order k={k} out of range for m={m}")
    npoints = 1 << m
    var_masks = []
    for i in range(m):
        mask = 0
        for j in range(npoints):
            if (j >> (m - 1 - i)) & 1:
                mask |= 1 << j
        var_masks.append(mask)
    ones = (1 << npoints) - 1
    gens = []
    for degree in range(k + 1):
        for monomial in combinations(range(m), degree):
            bits = ones
            for i in monomial:
                bits &= var_masks[i]
            gens.append(BitVector(npoints, bits))
    return reduce(gens, length=npoints)


def format_matrix(rows: Sequence[BitVector]) -> str:
    """Render rows as '0'/'1' lines, one vector per line."""
    return "".join(r.to01() + "\n" for r in rows)


def parse_matrix(text: str) -> list[BitVector]:
    """Parse the '0'/'1' line format produced by format_matrix."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise InvalidInput("empty matrix")
    rows = [BitVector.from01(line.strip()) for line in lines]
    if len({r.length for r in rows}) != 1:
        raise InvalidInput("matrix rows have unequal lengths")
    return rows
