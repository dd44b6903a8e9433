"""Realizability screen verdicts, rule traces, and the extremal bound."""

from __future__ import annotations

import pytest

import polycodes as pc
from polycodes.screen import _verify_witness


def rule_ids(verdict: pc.ScreenVerdict) -> list[str]:
    return [r.rule for r in verdict.trace]


# ------------------------------------------------------------ pinned cases


def test_length24_distance8_infeasible():
    v = pc.realizability_screen(24, 8, True)
    assert v.status == "Infeasible" and v.witness is None
    assert rule_ids(v) == [
        "candidate-dimensions",
        "segment-only",
        "distance-four",
        "exhausted",
    ]


def test_length48_distance12_infeasible():
    v = pc.realizability_screen(48, 12, True)
    assert v.status == "Infeasible"
    assert rule_ids(v) == [
        "candidate-dimensions",
        "segment-only",
        "distance-four",
        "rigid-facet",
        "facet-sizes",
        "exhausted",
    ]


def test_length72_distance16_infeasible():
    v = pc.realizability_screen(72, 16, True)
    assert v.status == "Infeasible"
    # Both admissible facet sizes (32 and 36) hit the rigidity argument.
    assert rule_ids(v) == [
        "candidate-dimensions",
        "segment-only",
        "distance-four",
        "rigid-facet",
        "rigid-facet",
        "facet-sizes",
        "exhausted",
    ]


def test_length8_witnessed_by_the_cube():
    v = pc.realizability_screen(8, 4, True)
    assert v.status == "FeasibleWitness"
    assert v.witness is not None and v.witness.text() == "cube 3"
    assert rule_ids(v)[-1] == "witness"


def test_length16_witnessed_by_the_octagonal_prism():
    v = pc.realizability_screen(16, 4, True)
    assert v.status == "FeasibleWitness"
    assert v.witness is not None and v.witness.text() == "prism 8"


def test_length2_witnessed_by_the_segment():
    v = pc.realizability_screen(2, 2, False)
    assert v.status == "FeasibleWitness"
    assert v.witness is not None and v.witness.text() == "segment"


def test_length12_witnessed_by_the_hexagonal_prism():
    v = pc.realizability_screen(12, 4, False)
    assert v.status == "FeasibleWitness"
    assert v.witness is not None and v.witness.text() == "prism 6"


def test_length16_not_doubly_even_is_open():
    # Octagonal prism codes of length 16 are doubly even, so nothing in
    # stock matches, but no rule excludes the parameters either.
    v = pc.realizability_screen(16, 4, False)
    assert v.status == "Unknown" and v.witness is None
    assert rule_ids(v)[-1] == "open"


# ------------------------------------------------------------ parity / input


@pytest.mark.parametrize("l,d", [(7, 4), (10, 3), (9, 3)])
def test_odd_parameters_are_infeasible(l, d):
    v = pc.realizability_screen(l, d, False)
    assert v.status == "Infeasible"
    assert rule_ids(v) == ["parity"]


def test_screen_rejects_bad_input():
    with pytest.raises(pc.InvalidInput):
        pc.realizability_screen(0, 4, False)
    with pytest.raises(pc.InvalidInput):
        pc.realizability_screen(8, 1, False)
    with pytest.raises(pc.InvalidInput):
        pc.realizability_screen("8", 4, False)
    with pytest.raises(pc.InvalidInput):
        pc.realizability_screen(8, 4.0, False)


# -------------------------------------------------------- verdict invariants


def test_verdict_constructor_guards():
    with pytest.raises(pc.InvalidInput):
        pc.ScreenVerdict(status="Maybe", trace=(), witness=None)
    with pytest.raises(pc.InvalidInput):
        pc.ScreenVerdict(status="Infeasible", trace=(), witness=None)
    with pytest.raises(pc.InvalidInput):
        pc.ScreenVerdict(status="FeasibleWitness", trace=(), witness=None)
    with pytest.raises(pc.InvalidInput):
        pc.ScreenVerdict(
            status="Unknown", trace=(), witness=pc.parse_recipe("cube 3")
        )


KNOWN_RULES = {
    "parity",
    "candidate-dimensions",
    "segment-only",
    "distance-four",
    "face-growth",
    "ridge-sizes",
    "rigid-facet",
    "facet-sizes",
    "exhausted",
    "witness",
    "open",
}


def test_screen_grid_invariants():
    for l in range(2, 26, 2):
        for d in (2, 4, 6, 8):
            for de in (False, True):
                v = pc.realizability_screen(l, d, de)
                assert set(rule_ids(v)) <= KNOWN_RULES
                if v.status == "FeasibleWitness":
                    assert rule_ids(v)[-1] == "witness"
                if v.status == "Infeasible":
                    assert v.trace
                for rule in v.trace:
                    assert rule.statement and rule.instantiation


def test_witness_claims_are_recomputed_not_trusted():
    # Deliberately wrong parameters for a correct construction must
    # raise instead of passing through.
    with pytest.raises(pc.TheoremViolation):
        _verify_witness(pc.parse_recipe("cube 3"), 8, 6, True)
    with pytest.raises(pc.TheoremViolation):
        _verify_witness(pc.parse_recipe("prism 6"), 12, 4, True)
    with pytest.raises(pc.TheoremViolation):
        _verify_witness(pc.parse_recipe("simplex 3"), 4, 2, False)


# ------------------------------------------------------------ extremal bound


def test_extremal_bound_values():
    assert pc.mallows_sloane(8)[0] == 4
    assert pc.mallows_sloane(16)[0] == 4
    assert pc.mallows_sloane(24)[0] == 8
    assert pc.mallows_sloane(32)[0] == 8
    assert pc.mallows_sloane(48)[0] == 12
    assert pc.mallows_sloane(72)[0] == 16


def test_cube3_code_is_extremal():
    bound, is_extremal = pc.mallows_sloane(8)
    assert bound == 4
    assert is_extremal(pc.face_code(pc.cube(3), 1).code)


def test_prism8_code_is_extremal():
    bound, is_extremal = pc.mallows_sloane(16)
    assert is_extremal(pc.face_code(pc.prism(8), 1).code)


def test_extremal_bound_guards():
    with pytest.raises(pc.Inapplicable):
        pc.mallows_sloane(12)
    with pytest.raises(pc.InvalidInput):
        pc.mallows_sloane(0)
    with pytest.raises(pc.InvalidInput):
        pc.mallows_sloane(-8)
    _, is_extremal = pc.mallows_sloane(8)
    with pytest.raises(pc.InvalidInput):
        is_extremal(pc.face_code(pc.prism(8), 1).code)
