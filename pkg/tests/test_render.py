import math
import xml.etree.ElementTree as ET
from itertools import product

from almostpa.diagram import parse_pd, unknot
from almostpa.render import _layout, to_svg
from almostpa.tangle import numerator_closure, tangle_diagram

TREFOIL = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"
NS = "{http://www.w3.org/2000/svg}"


def test_svg_is_well_formed():
    d = parse_pd(TREFOIL)
    root = ET.fromstring(to_svg(d, "trefoil"))
    assert root.tag == NS + "svg"
    assert root.find(NS + "title").text == "trefoil"
    assert len(root.findall(NS + "path")) == len(d.labels)
    assert float(root.get("width")) > 0 and float(root.get("height")) > 0


def test_rendering_leaves_diagram_alone():
    d = parse_pd(TREFOIL)
    before = d.to_json()
    to_svg(d)
    assert d.to_json() == before


def test_circles():
    root = ET.fromstring(to_svg(unknot(2)))
    assert len(root.findall(NS + "circle")) == 2
    root = ET.fromstring(to_svg(parse_pd({"pd": [[1, 2, 2, 1]], "zero_components": 1})))
    assert len(root.findall(NS + "circle")) == 1


def _screen_turn(pos, nbr, i):
    cx, cy = pos[("x", i)]
    ang = [math.atan2(pos[nbr[(i, k)]][1] - cy, pos[nbr[(i, k)]][0] - cx) for k in range(4)]
    return sum((ang[(k + 1) % 4] - ang[k]) % (2 * math.pi) for k in range(4))


def test_every_crossing_reads_counterclockwise():
    # with y growing downwards a counterclockwise slot order shows up as
    # three full turns of decreasing screen angle
    for m in (1, 2, 3):
        for cv in product((1, 2, -1, -3), repeat=m):
            d = numerator_closure(tangle_diagram(cv))
            if d.n == 0:
                continue
            pos, nbr = _layout(d)
            for i in range(d.n):
                assert math.isclose(_screen_turn(pos, nbr, i), 6 * math.pi), (cv, i)


def test_mirror_draws_same_layout():
    d = parse_pd(TREFOIL)
    assert _layout(d)[0] == _layout(d.mirror())[0]
