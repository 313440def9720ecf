import json

import pytest
from hypothesis import given, settings, strategies as st

from almostpa.diagram import (
    Diagram,
    DiagramError,
    admits_negative_orientation,
    admits_positive_orientation,
    alternating_status,
    connected_sum,
    edit,
    orient_and_sign,
    parse_pd,
    positivity_status,
    reducedness,
    unknot,
)
from almostpa.montesinos import pa_to_almost_pa
from almostpa.tangle import numerator_closure, tangle_diagram

TREFOIL = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"
FIGURE8 = "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]"
HOPF = "[[4,1,3,2],[2,3,1,4]]"


def trefoil():
    return parse_pd(TREFOIL)


# --- parsing ----------------------------------------------------------------


def test_parse_trefoil():
    d = trefoil()
    assert d.n == 3
    assert len(d.components) == 1
    assert sorted(d.labels) == [1, 2, 3, 4, 5, 6]


def test_parse_crossingless_unknot():
    d = parse_pd("[]", zero_components=1)
    assert d.n == 0 and d.num_components == 1


@pytest.mark.parametrize(
    "text",
    [
        "[[1,2,3,4],[1,2,3,1]]",  # label 1 three times
        "[[1,2,3]]",
        "not json",
        '{"zero_components": 1}',
        "[[0,1,1,0]]",
    ],
)
def test_parse_rejects(text):
    with pytest.raises(DiagramError):
        parse_pd(text)


def test_nonplanar_rotation_rejected():
    # two crossings wired like a virtual knot: every edge joins the two
    # crossings but the cyclic orders cannot be drawn in the plane
    with pytest.raises(DiagramError):
        parse_pd("[[1,2,3,4],[2,3,1,4]]")


def test_object_form_and_orientation():
    d = parse_pd({"pd": json.loads(HOPF), "orientation": [1, -1]})
    assert d.signs() == (-1, -1)


def test_json_is_byte_stable():
    d = trefoil()
    assert d.to_json() == json.dumps(json.loads(TREFOIL))
    assert parse_pd(d.to_json()) == d
    u = unknot(2)
    assert parse_pd(u.to_json()) == u


# --- faces -------------------------------------------------------------------


def test_face_counts():
    assert len(trefoil().faces()) == 5
    assert len(unknot().faces()) == 2
    assert len(parse_pd(FIGURE8).faces()) == 6


def _edge_sides_once(d):
    sides = [s for f in d.faces() for s in f.boundary]
    assert len(sides) == len(set(sides)) == 2 * len(d.labels)


def test_faces_partition_edge_sides():
    _edge_sides_once(trefoil())
    _edge_sides_once(parse_pd(FIGURE8))


# --- signs -------------------------------------------------------------------


def test_trefoil_signs():
    assert orient_and_sign(trefoil()) == ((1, 1, 1), 3)
    assert orient_and_sign(trefoil().mirror()) == ((-1, -1, -1), -3)


def test_figure_eight_signs():
    signs, w = orient_and_sign(parse_pd(FIGURE8))
    assert sorted(signs) == [-1, -1, 1, 1] and w == 0


# --- alternating -------------------------------------------------------------


def test_trefoil_alternating():
    assert alternating_status(trefoil()).kind == "alternating"


def test_single_change_makes_almost_alternating():
    d = trefoil().crossing_change(1)
    st = alternating_status(d)
    assert st.kind == "almost_alternating"
    assert st.dealternators == (1,)


def test_two_changes_can_give_neither():
    # granny-knot style: two trefoils summed, one crossing changed in each
    t = trefoil()
    s = connected_sum(t, 1, t, 1)
    assert alternating_status(s).kind == "alternating"
    st = alternating_status(s.crossing_change(0).crossing_change(4))
    assert st.kind == "neither"


def test_dealternators_are_exactly_the_repairing_crossings():
    d = numerator_closure(tangle_diagram((3, 1, 2)))
    for c in range(d.n):
        e = d.crossing_change(c)
        st = alternating_status(e)
        repairs = [x for x in range(e.n) if alternating_status(e.crossing_change(x)).kind == "alternating"]
        assert list(st.dealternators) == repairs


# --- positivity --------------------------------------------------------------


def test_positivity_examples():
    assert positivity_status(trefoil()) == (True, True, ())
    p = positivity_status(parse_pd(FIGURE8))
    assert not p.is_positive and not p.admits_positive_orientation


def test_hopf_positive_after_reversal():
    neg = parse_pd({"pd": json.loads(HOPF), "orientation": [1, -1]})
    st = positivity_status(neg)
    assert not st.is_positive and st.admits_positive_orientation
    assert all(s > 0 for s in neg.reverse_components(st.witness).signs())


def test_positive_mirror_duality():
    for d in (trefoil(), parse_pd(FIGURE8), parse_pd(HOPF)):
        assert admits_positive_orientation(d) == admits_negative_orientation(d.mirror())


# --- reducedness -------------------------------------------------------------


def test_trefoil_reduced():
    r = reducedness(trefoil())
    assert r.reduced and r.ii_reduced


def test_kink_is_nugatory():
    m = pa_to_almost_pa(trefoil())
    r = reducedness(m.diagram)
    assert not r.reduced
    assert m.d in r.nugatory


def test_clasp_detected():
    # the 2-crossing unlink diagram: a same-over bigon
    clasp = parse_pd("[[1,3,2,4],[2,3,1,4]]")
    r = reducedness(clasp)
    assert not r.ii_reduced and r.clasps == ((0, 1),)
    assert reducedness(parse_pd(HOPF)).ii_reduced


# --- edits -------------------------------------------------------------------


def test_edit_involutions():
    d = parse_pd(FIGURE8)
    assert edit(edit(d, "crossing_change", 2), "crossing_change", 2) == d
    assert edit(edit(d, "mirror"), "mirror") == d
    assert edit(edit(d, "reverse_component", 0), "reverse_component", 0) == d


def test_crossing_change_negates_one_sign():
    d = parse_pd(FIGURE8)
    for c in range(d.n):
        s, e = d.signs(), d.crossing_change(c).signs()
        assert [a == b for a, b in zip(s, e)] == [i != c for i in range(d.n)]


def test_edit_rejects_bad_reference():
    with pytest.raises((DiagramError, IndexError, ValueError)):
        edit(trefoil(), "crossing_change", 7)
    with pytest.raises(ValueError):
        edit(trefoil(), "flype")


# --- connected sum -----------------------------------------------------------


def test_connected_sum_counts_and_identity():
    t, f = trefoil(), parse_pd(FIGURE8)
    assert connected_sum(t, 1, f, 1).n == 7
    assert connected_sum(t, 1, unknot(), None) == t


def test_connected_sum_of_trefoils_can_alternate():
    t = trefoil()
    kinds = {alternating_status(connected_sum(t, a, t, b)).kind for a in t.labels for b in t.labels}
    assert "alternating" in kinds


# --- properties over rational closures ---------------------------------------

vectors = st.lists(st.integers(1, 3), min_size=1, max_size=4).map(tuple)


@settings(max_examples=60, deadline=None)
@given(vectors, st.booleans())
def test_mirror_negates_signs(cv, numer):
    t = tangle_diagram(cv)
    d = numerator_closure(t) if numer else t.fragment.denominator().to_diagram()
    if d.n == 0:
        return
    assert d.mirror().signs() == tuple(-s for s in d.signs())
    _edge_sides_once(d)
    assert parse_pd(d.to_json()) == d


@settings(max_examples=60, deadline=None)
@given(vectors)
def test_alternating_closures(cv):
    d = numerator_closure(tangle_diagram(cv))
    assert d.n == 0 or alternating_status(d).kind == "alternating"


def test_diagram_is_immutable():
    d = trefoil()
    with pytest.raises(Exception):
        d.crossings = ()
    assert isinstance(hash(d), int)


def test_zero_component_count_validated():
    with pytest.raises(DiagramError):
        Diagram((), (), -1)
