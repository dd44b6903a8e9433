"""Verification suites over the built-in corpus (or a single polytope).

Each suite walks its subjects and records CheckResult rows. Theorem
cross-checks raise TheoremViolation out of the underlying modules and
are deliberately not caught here; a False row records an expectation
that failed without tripping an internal assertion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .corpus import corpus
from .errors import InvalidInput
from .facecodes import (
    circ_closure_check,
    colorability_report,
    dimension_law_check,
    doubly_even_report,
    duality_complement_check,
    face_code,
    mallows_sloane,
    min_distance_bound_check,
    realizability_screen,
    self_duality_report,
)
from .gf2 import is_self_dual
from .morse import extract_basis, generic_height, index_histogram
from .polytope import SimplePolytope, fh_vectors, is_even

__all__ = ["CheckResult", "SUITES", "corpus_subjects", "run_suite"]

SUITES = (
    "colorability",
    "selfdual",
    "duality",
    "morse",
    "screen",
    "conjecture",
    "all",
)

_MORSE_SEEDS = range(5)

_SCREEN_CASES = (
    (24, 8, True, "Infeasible"),
    (48, 12, True, "Infeasible"),
    (72, 16, True, "Infeasible"),
    (8, 4, True, "FeasibleWitness"),
    (16, 4, True, "FeasibleWitness"),
)


@dataclass(frozen=True)
class CheckResult:
    suite: str
    subject: str
    check: str
    passed: bool
    detail: str


def corpus_subjects() -> list[tuple[str, SimplePolytope]]:
    return [(entry.label, entry.build()) for entry in corpus()]


def _suite_colorability(subjects) -> list[CheckResult]:
    results = []
    for label, P in subjects:
        report = colorability_report(P)
        if report.degenerate_dimension:
            detail = f"dimension {P.dim} below 3, direct search only: colorable={report.colorable}"
        else:
            detail = f"six criteria agree: colorable={report.colorable}"
        results.append(
            CheckResult("colorability", label, "criteria-agreement", True, detail)
        )
    return results


def _suite_selfdual(subjects) -> list[CheckResult]:
    results = []
    for label, P in subjects:
        h = fh_vectors(P).h
        shortfall = []
        for k in range(P.dim + 1):
            dim = face_code(P, k).code.dim
            if dim < sum(h[: k + 1]):
                shortfall.append(k)
        results.append(
            CheckResult(
                "selfdual",
                label,
                "dimension-lower-bound",
                not shortfall,
                "dim of each code at least the partial h-sum"
                if not shortfall
                else f"bound fails at codimensions {shortfall}",
            )
        )
        self_dual_ks = []
        for k in range(P.dim + 1):
            if self_duality_report(P, k).self_dual:
                self_dual_ks.append(k)
        results.append(
            CheckResult(
                "selfdual",
                label,
                "route-agreement",
                True,
                f"direct and structural routes agree for all k; self-dual at {self_dual_ks}",
            )
        )
        if P.dim == 4:
            results.append(
                CheckResult(
                    "selfdual",
                    label,
                    "no-self-dual-dimension-4",
                    not self_dual_ks,
                    f"self-dual codimensions: {self_dual_ks}",
                )
            )
        if is_even(P):
            law = dimension_law_check(P)
            results.append(
                CheckResult(
                    "selfdual",
                    label,
                    "dimension-law",
                    True,
                    f"dims {tuple(r.dim for r in law.rows)} match partial h-sums; self-dual at {law.self_dual_codims}",
                )
            )
            if P.dim % 2 == 1:
                bound, exact = min_distance_bound_check(P)
                results.append(
                    CheckResult(
                        "selfdual",
                        label,
                        "distance-bound",
                        True,
                        f"minimum distance {exact} within the face bound {bound}",
                    )
                )
                de = doubly_even_report(P)
                results.append(
                    CheckResult(
                        "selfdual",
                        label,
                        "doubly-even-criterion",
                        True,
                        f"doubly even: {de.doubly_even}, by face sizes and by weights",
                    )
                )
    return results


def _suite_duality(subjects) -> list[CheckResult]:
    results = []
    for label, P in subjects:
        if not is_even(P):
            continue
        ok = duality_complement_check(P)
        results.append(
            CheckResult(
                "duality",
                label,
                "complement-pairing",
                ok,
                "dual of each code is the complementary-codimension code"
                if ok
                else "pairing failed",
            )
        )
        bad = [k for k in range(1, P.dim + 1) if not circ_closure_check(P, k)]
        results.append(
            CheckResult(
                "duality",
                label,
                "product-closure",
                not bad,
                "facet-indicator products span each code"
                if not bad
                else f"closure fails at codimensions {bad}",
            )
        )
    return results


def _suite_morse(subjects) -> list[CheckResult]:
    results = []
    for label, P in subjects:
        if P.coords is None:
            results.append(
                CheckResult("morse", label, "skipped", True, "no coordinates")
            )
            continue
        for seed in _MORSE_SEEDS:
            phi = generic_height(P, seed)
            index_histogram(P, phi)
            for k in range(P.dim + 1):
                extract_basis(P, phi, k)
        results.append(
            CheckResult(
                "morse",
                label,
                "histogram-and-independence",
                True,
                f"{len(_MORSE_SEEDS)} seeds: histogram is the h-vector, selections independent",
            )
        )
    return results


def _suite_screen(subjects) -> list[CheckResult]:
    results = []
    for l, d, de, expected in _SCREEN_CASES:
        verdict = realizability_screen(l, d, de)
        witness = f" ({verdict.witness.text()})" if verdict.witness else ""
        results.append(
            CheckResult(
                "screen",
                f"({l}, {d}, {'doubly even' if de else 'not doubly even'})",
                "pinned-verdict",
                verdict.status == expected,
                f"expected {expected}, got {verdict.status}{witness}",
            )
        )
    for l, expected_bound in ((8, 4), (16, 4), (24, 8)):
        bound, _ = mallows_sloane(l)
        results.append(
            CheckResult(
                "screen",
                f"length {l}",
                "extremal-bound",
                bound == expected_bound,
                f"expected {expected_bound}, got {bound}",
            )
        )
    return results


def _suite_conjecture(subjects) -> list[CheckResult]:
    # Self-dual face codes are conjectured to force odd dimension,
    # middle codimension, and evenness. Observations are reported,
    # never asserted: a counterexample still passes.
    results = []
    for label, P in subjects:
        for k in range(P.dim + 1):
            if not is_self_dual(face_code(P, k).code).self_dual:
                continue
            consistent = P.dim % 2 == 1 and k == (P.dim - 1) // 2 and is_even(P)
            detail = (
                f"self-dual at k={k}: dimension {P.dim}, even={is_even(P)}; "
                + ("consistent" if consistent else "COUNTEREXAMPLE OBSERVED")
            )
            results.append(
                CheckResult("conjecture", label, "self-dual-shape", True, detail)
            )
    if not results:
        results.append(
            CheckResult(
                "conjecture", "corpus", "self-dual-shape", True, "no self-dual codes"
            )
        )
    return results


_SUITE_RUNNERS = {
    "colorability": _suite_colorability,
    "selfdual": _suite_selfdual,
    "duality": _suite_duality,
    "morse": _suite_morse,
    "screen": _suite_screen,
    "conjecture": _suite_conjecture,
}


def run_suite(
    suite: str, subjects: Sequence[tuple[str, SimplePolytope]]
) -> list[CheckResult]:
    if suite not in SUITES:
        raise InvalidInput(f"unknown suite {suite!r}, choose from {', '.join(SUITES)}")
    names = list(_SUITE_RUNNERS) if suite == "all" else [suite]
    results: list[CheckResult] = []
    for name in names:
        results.extend(_SUITE_RUNNERS[name](subjects))
    return results
