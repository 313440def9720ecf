from itertools import product

import pytest

from almostpa.bracket import normalized_bracket
from almostpa.diagram import _orientation_choices, alternating_status, parse_pd, positivity_status, reducedness
from almostpa.montesinos import (
    MarkedDiagram,
    MontesinosSpec,
    PreconditionError,
    UnsupportedSpec,
    align_connected_sum,
    almost_pa,
    build_standard,
    check_marked,
    decompose_infinity,
    infinity_summands,
    is_positive_spec,
    normal_form,
    pa_to_almost_pa,
    route_of,
    verify_standard_alternating,
)
from almostpa.tangle import TangleFraction, denominator_closure, numerator_closure, tangle_diagram

TREFOIL = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"


def oriented_brackets(d):
    return frozenset(normalized_bracket(d.reverse_components(r)) for r in _orientation_choices(d))


def spec(text):
    return MontesinosSpec.parse(text)


# --- parsing -----------------------------------------------------------------


def test_parse_fractions_and_vectors():
    s = spec("C(3/2, -1/3, inf)")
    assert [str(f) for f in s.fractions] == ["3/2", "-1/3", "inf"]
    assert spec("C([2,0],[2,0])") == spec("C(1/2,1/2)")
    assert str(spec("C( 6/4 )")) == "C(3/2)"


@pytest.mark.parametrize("text", ["3/2,1", "C()", "C(1/0/2)", "C(x)", "C([2,)"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        spec(text)


# --- the standard diagram ----------------------------------------------------


def test_three_halves_gives_six_crossings():
    s = MontesinosSpec(((2, 0), (2, 0), (2, 0)))
    assert all(f == TangleFraction(1, 2) for f in s.fractions)
    assert build_standard(s).diagram.n == 6


def test_single_tangle_is_its_numerator_closure():
    for cv in [(3,), (2, 1), (2, 2), (1, 1, 2)]:
        d = build_standard(MontesinosSpec((cv,))).diagram
        n = numerator_closure(tangle_diagram(cv))
        assert d.n == n.n
        assert oriented_brackets(d) == oriented_brackets(n)


def test_negative_integers_alternate():
    for ks in [(-2, -3), (-1, -1, -1), (-2, -2, -4)]:
        d = build_standard(MontesinosSpec(tuple((k,) for k in ks))).diagram
        assert alternating_status(d).kind == "alternating"


def test_crossing_count():
    assert spec("C(3/2,-1/3,2)").crossing_count == 3 + 3 + 2


def test_verify_standard_alternating():
    assert verify_standard_alternating(spec("C(3/2,3/2,3/2)"))
    assert verify_standard_alternating(spec("C(-2,-3)"))
    # C(1/2, -1/2) has no positive orientation at all
    with pytest.raises(PreconditionError):
        verify_standard_alternating(spec("C(1/2,-1/2)"))


def test_positivity_by_junction_states_matches_search():
    vals = ["2", "-2", "3", "-3", "1/2", "-1/2", "3/2", "-1/3", "5/2"]
    seen = {True: 0, False: 0}
    for m in (2, 3):
        for fr in product(vals, repeat=m):
            s = MontesinosSpec.from_fractions(fr)
            d = build_standard(s).diagram
            expect = positivity_status(d).admits_positive_orientation
            assert is_positive_spec(s) == expect, s
            seen[expect] += 1
    assert seen[True] > 20 and seen[False] > 20


# --- infinity tangles --------------------------------------------------------


def test_lone_infinity_is_empty():
    assert decompose_infinity(spec("C(inf)"), 0) == []


def test_one_summand():
    ds = decompose_infinity(spec("C(3,inf)"), 1)
    assert len(ds) == 1
    ref = denominator_closure(tangle_diagram((3,)))
    assert ds[0].n == 3
    assert normalized_bracket(ds[0]) == normalized_bracket(ref)


def test_summands_follow_cyclic_order():
    ds = decompose_infinity(spec("C(2,inf,3)"), 1)
    assert [d.n for d in ds] == [3, 2]


def test_decompose_rejects_finite_index():
    with pytest.raises(PreconditionError):
        decompose_infinity(spec("C(2,inf)"), 0)
    with pytest.raises(IndexError):
        decompose_infinity(spec("C(2,inf)"), 5)


def test_alignment_needs_no_slide_when_junctions_agree():
    r = align_connected_sum(infinity_summands(spec("C(2,inf,3)"), 1))
    assert r.slides == 0 and r.diagram.n == 5


def test_alignment_slides_a_mismatched_junction():
    parts = infinity_summands(spec("C(2,inf,-2)"), 1)
    r = align_connected_sum(parts)
    assert r.slides == 1
    assert alternating_status(r.diagram).kind == "alternating"
    prod = normalized_bracket(parts[0].diagram) * normalized_bracket(parts[1].diagram)
    assert normalized_bracket(r.diagram) == prod


def test_slides_bounded_by_junction_count():
    vals = ["2", "-2", "3", "-1/2", "3/2"]
    for fr in product(vals, repeat=3):
        s = MontesinosSpec.from_fractions(list(fr) + ["inf"])
        parts = infinity_summands(s, 3)
        r = align_connected_sum(parts)
        assert r.slides <= len(parts) - 1
        assert alternating_status(r.diagram).kind == "alternating"


# --- the kink ----------------------------------------------------------------


def test_kink_on_trefoil():
    d = parse_pd(TREFOIL)
    m = pa_to_almost_pa(d)
    assert m.diagram.n == 4
    assert normalized_bracket(m.diagram) == normalized_bracket(d)
    assert alternating_status(m.diagram).kind == "almost_alternating"
    assert all(check_marked(m, d).values())
    assert not reducedness(m.diagram).reduced


# --- routes ------------------------------------------------------------------


@pytest.mark.parametrize(
    "text,route",
    [("C(3/2,3/2,3/2)", "b"), ("C(3,inf)", "a"), ("C(1/3,1/3,-1/2)", "c"), ("C(2,3,4)", "b")],
)
def test_route_choice(text, route):
    assert route_of(spec(text)) == route


@pytest.mark.parametrize(
    "text",
    ["C(3/2,3/2,3/2)", "C(3,inf)", "C(2,inf,3)", "C(1/3,1/3,-1/2)", "C(-2,-3)", "C(1/2,1/3,2)", "C(1/2,-1/2,1/3)", "C(inf)"],
)
def test_contract(text):
    s = spec(text)
    std = build_standard(s)
    m = almost_pa(s)
    assert m.route == route_of(s)
    assert check_marked(m, std.diagram) == {
        "bracket_equal": True,
        "changed_alternating": True,
        "changed_positive": True,
    }


def test_non_positive_spec_rejected():
    with pytest.raises(PreconditionError):
        almost_pa(spec("C(2,inf,-3)"))


def test_unsupported_normal_form():
    s = spec("C(1/3,-1/2,-1/2,1/4)")
    assert is_positive_spec(s)
    e, gs = normal_form(s)
    assert e == -2 and len(gs) == 4
    with pytest.raises(UnsupportedSpec):
        almost_pa(s)


def test_normal_form():
    e, gs = normal_form(spec("C(7/3,-1/2,4)"))
    assert e == 2 - 1 + 4
    assert gs == (TangleFraction(1, 3), TangleFraction(1, 2))
    with pytest.raises(PreconditionError):
        normal_form(spec("C(2,inf)"))


def test_marked_json_round_trip():
    m = almost_pa(spec("C(1/3,1/3,-1/2)"))
    back = MarkedDiagram.from_json(m.to_json())
    assert back.diagram == m.diagram and back.d == m.d
    with pytest.raises(ValueError):
        MarkedDiagram(m.diagram, m.diagram.n)
