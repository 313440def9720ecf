from itertools import product

import pytest

from almostpa.orientation import (
    TangleType,
    boundary_class,
    boundary_orientations,
    classify_type,
    consistent_orientations,
    lemma_sign_prediction,
    propagate,
)
from almostpa.planar import Fragment, OrientationError
from almostpa.tangle import RationalTangle, TangleFraction, fraction_of, rotate_pi, tangle_diagram

ZERO = RationalTangle(Fragment.zero(), (0,))
ROT = {"NW": "SE", "SE": "NW", "NE": "SW", "SW": "NE"}


def test_six_boundaries():
    bs = list(boundary_orientations())
    assert len(bs) == 6
    assert all(sum(v == "in" for v in b.values()) == 2 for b in bs)


def test_zero_tangle_horizontal_flow():
    ot = propagate(ZERO, {"NW": "in", "SW": "in", "NE": "out", "SE": "out"})
    assert ot.directions == {"NW": "in", "SW": "in", "NE": "out", "SE": "out"}
    assert ot.signs == ()


def test_one_crossing():
    # [1] joins NW-SE and SW-NE, so NW and SE cannot both be inputs
    one = tangle_diagram((1,))
    with pytest.raises(OrientationError):
        propagate(one, {"NW": "in", "SE": "in", "NE": "out", "SW": "out"})
    ot = propagate(one, {"NW": "in", "NE": "in", "SW": "out", "SE": "out"})
    assert len(ot.signs) == 1 and ot.signs[0] in (1, -1)


def test_three_ins_rejected():
    with pytest.raises(OrientationError):
        propagate(ZERO, {"NW": "in", "SW": "in", "NE": "in", "SE": "out"})


def test_parallel_left_arcs_are_type_one():
    ot = propagate(ZERO, {"NW": "in", "SW": "in", "NE": "out", "SE": "out"})
    assert classify_type(ot, TangleFraction(0, 1)) is TangleType.I


def test_two_twist_positive_orientations():
    # in [2] the NW and NE ends lie on one strand, so with antiparallel left
    # arcs and all crossings positive the tangle is type III (and |f| >= 1)
    t = tangle_diagram((2,))
    pos = [ot for ot in consistent_orientations(t) if ot.all_positive]
    assert pos and all(classify_type(ot) is TangleType.III_PLUS for ot in pos)
    assert all(ot.directions["NW"] != ot.directions["SW"] for ot in pos)


def test_minus_half_is_three_minus():
    t = tangle_diagram((-2, 0))
    pos = [ot for ot in consistent_orientations(t) if ot.all_positive]
    assert pos and all(classify_type(ot) is TangleType.III_MINUS for ot in pos)


def test_sign_law_table():
    f = TangleFraction(3, 2)
    assert lemma_sign_prediction(TangleType.I, f) == -1
    assert lemma_sign_prediction(TangleType.II, f) == 1
    assert lemma_sign_prediction(TangleType.III_PLUS, f) == 1
    assert lemma_sign_prediction(TangleType.III_MINUS, TangleFraction(-1, 2)) == -1
    for bad in (TangleFraction(0, 1), TangleFraction(1, 0)):
        with pytest.raises(ValueError):
            lemma_sign_prediction(TangleType.I, bad)


def test_boundary_classes():
    assert boundary_class({"NW": "in", "SW": "in", "NE": "out", "SE": "out"}) == "I"
    assert boundary_class({"NW": "in", "NE": "in", "SW": "out", "SE": "out"}) == "II"
    assert boundary_class({"NW": "in", "SE": "in", "NE": "out", "SW": "out"}) == "III"


def test_sign_law_small_sweep():
    vals = [-3, -2, -1, 1, 2, 3]
    checked = 0
    for m in range(1, 4):
        for head in product(vals, repeat=m - 1):
            for last in vals + [0]:
                cv = head + (last,)
                f = fraction_of(cv)
                if f.is_infinite or f.alpha == 0:
                    continue
                for ot in consistent_orientations(tangle_diagram(cv)):
                    if ot.all_positive:
                        checked += 1
                        assert lemma_sign_prediction(classify_type(ot, f), f) == f.sign(), cv
    assert checked > 100


def test_rotation_keeps_type():
    for cv in [(2,), (2, 1), (-2, 0), (1, 1, 2), (-3, -1, 0)]:
        t = tangle_diagram(cv)
        r = rotate_pi(t)
        for ot in consistent_orientations(t):
            moved = {ROT[p]: v for p, v in ot.directions.items()}
            rot = propagate(r, moved)
            assert rot.signs == ot.signs  # rotation in the plane keeps every sign
            assert classify_type(rot, t.fraction) == classify_type(ot, t.fraction)


def test_reversing_everything_keeps_type_and_signs():
    flip = {"in": "out", "out": "in"}
    for cv in [(3,), (2, 1), (-1, -2, 0)]:
        t = tangle_diagram(cv)
        for ot in consistent_orientations(t):
            rev = propagate(t, {p: flip[v] for p, v in ot.directions.items()})
            assert rev.signs == ot.signs
            assert classify_type(rev, t.fraction) == classify_type(ot, t.fraction)
