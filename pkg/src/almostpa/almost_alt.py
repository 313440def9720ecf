"""Positive almost alternating diagrams and how to make them alternating.

Setting: ``D`` is almost alternating with dealternator ``d`` and positive.
The frame around ``d`` consists of ``d`` and its four neighbours: ``alpha``
and ``alpha_prime`` (next and previous crossing along the over-strand of
``d``), ``beta`` and ``beta_prime`` (the same along the under-strand).  The
rest of the diagram is the region ``A``.

Two oriented walks are traced through ``A``:

* ``p``: start at ``alpha`` on the strand passing under there; at each
  crossing reached (as the over-strand, by alternation) switch to the strand
  passing under it.  Every arc runs from an under-crossing to an
  over-crossing.
* ``q``: start at ``beta`` on the strand passing over there; at each crossing
  reached (as the under-strand) switch to the over-strand.  Every arc runs
  from an over-crossing to an under-crossing.

In a positive diagram both walks follow Seifert circles, so ``p`` ends at
``beta_prime`` and ``q`` at ``alpha_prime``.  If they meet, the disk ``A``
does not split and :class:`SeparationViolation` is raised.  Otherwise ``A``
splits into ``A1`` (the ``q`` side) and ``A2`` (the ``p`` side); turning
``A2`` over removes ``d`` and leaves an alternating diagram of the same link.

A parity fact limits what can be fed in.  Walking around a face, the strand
directions along its boundary switch an even number of times.  In an
alternating diagram the sign of a crossing says whether the switch happens
at its shaded or at its unshaded corners, so a reduced alternating diagram
never has exactly one negative crossing.  Changing the dealternator of a
positive almost alternating diagram would produce one, so in every such
diagram the dealternator is nugatory.  :func:`build_test_instance`
therefore plants the frame around a nugatory ``d``; the "reduced"
hypothesis of :func:`locate_frame` cannot be met by any input.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .bracket import DEFAULT_MAX_CROSSINGS, normalized_bracket
from .diagram import (
    Diagram,
    alternating_status,
    positivity_status,
    reducedness,
    signs_under_reversal,
    _orientation_choices,
)
from .montesinos import InvariantViolation, PreconditionError
from .planar import Fragment
from .tangle import Tangle

ROTATE_90 = {"NW": "SW", "SW": "SE", "SE": "NE", "NE": "NW"}


class SeparationViolation(InvariantViolation):
    """The two traced arc sequences meet, so region A does not split."""


@dataclass(frozen=True)
class DealternatorFrame:
    d: int
    alpha: int
    alpha_prime: int
    beta: int
    beta_prime: int
    region: frozenset  # indices into D.faces() of the faces inside A
    inside: frozenset  # crossings inside A

    @property
    def crossings(self) -> tuple[int, int, int, int, int]:
        return (self.d, self.alpha, self.alpha_prime, self.beta, self.beta_prime)

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "alpha": self.alpha,
            "alpha_prime": self.alpha_prime,
            "beta": self.beta,
            "beta_prime": self.beta_prime,
        }


@dataclass(frozen=True)
class ArcSequence:
    crossings: tuple[int, ...]  # p_1 .. p_m (or q_1 .. q_n), all inside A
    arcs: tuple[int, ...]  # edge labels of the arcs p_0 .. p_m
    start: int
    end: int


@dataclass(frozen=True)
class TestInstance:
    __test__ = False  # not a pytest class

    diagram: Diagram
    frame: DealternatorFrame
    a1: tuple[int, ...]
    a2: tuple[int, ...]

    def to_dict(self) -> dict:
        out = {"pd": [list(t) for t in self.diagram.crossings], "frame": self.frame.to_dict()}
        if self.diagram.zero_components:
            out["zero_components"] = self.diagram.zero_components
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


# ---------------------------------------------------------------------------
# slots of a crossing in a Diagram: 0 under-in, 2 under-out


def _over_in(d: Diagram, i: int) -> int:
    return 1 if d.over_in[i] else 3


def _over_out(d: Diagram, i: int) -> int:
    return 3 if d.over_in[i] else 1


def _head(d: Diagram, i: int, pos: int) -> tuple[int, int]:
    """Slot reached by the edge leaving crossing ``i`` at position ``pos``."""
    return d._ends[d.crossings[i][pos]][1]


def _tail(d: Diagram, i: int, pos: int) -> tuple[int, int]:
    return d._ends[d.crossings[i][pos]][0]


def _frame_at(d: Diagram, c: int) -> DealternatorFrame:
    alpha = _head(d, c, _over_out(d, c))[0]
    alpha_p = _tail(d, c, _over_in(d, c))[0]
    beta = _head(d, c, 2)[0]
    beta_p = _tail(d, c, 0)[0]
    frame = {c, alpha, alpha_p, beta, beta_p}
    inside = frozenset(range(d.n)) - frame
    region = frozenset(k for k, f in enumerate(d.faces()) if c not in f.corners)
    return DealternatorFrame(c, alpha, alpha_p, beta, beta_p, region, inside)


# ---------------------------------------------------------------------------
# frame


def _positive_almost_alternating(d: Diagram):
    if not positivity_status(d).is_positive:
        raise PreconditionError("diagram is not positive under its orientation")
    st = alternating_status(d)
    if st.kind != "almost_alternating":
        raise PreconditionError(f"diagram is {st.kind}, not almost alternating")
    return st.dealternators


def locate_frame(d: Diagram) -> DealternatorFrame:
    deal = _positive_almost_alternating(d)
    red = reducedness(d)
    if not red.reduced:
        raise PreconditionError("diagram is reducible; use reduce_trivial")
    if not red.ii_reduced:
        raise PreconditionError("diagram is II-reducible; use reduce_trivial")
    f = _frame_at(d, deal[0])
    if len(set(f.crossings)) != 5:
        # two frame crossings coincide: d and a neighbour bound a region in
        # a way only a negative crossing allows
        raise InvariantViolation("forbidden frame configuration around the dealternator")
    return f


# ---------------------------------------------------------------------------
# arc sequences


def _walk(d: Diagram, f: DealternatorFrame, start: int, leave_pos, arrive_ok, end: int, name: str) -> ArcSequence:
    crossings, arcs = [], []
    x = start
    seen = set()
    while True:
        pos = leave_pos(x)
        arcs.append(d.crossings[x][pos])
        y, k = _head(d, x, pos)
        if y not in f.inside:
            if y != end:
                raise InvariantViolation(f"{name} trace escapes region A at crossing {y}")
            return ArcSequence(tuple(crossings), tuple(arcs), start, end)
        if not arrive_ok(k):
            raise InvariantViolation(f"{name} arc into crossing {y} breaks the o/u alternation")
        if y in seen:
            raise InvariantViolation(f"{name} trace cycles inside region A")
        seen.add(y)
        crossings.append(y)
        x = y


def trace_sequences(d: Diagram, f: DealternatorFrame) -> tuple[ArcSequence, ArcSequence]:
    p = _walk(d, f, f.alpha, lambda x: 2, lambda k: k % 2 == 1, f.beta_prime, "p")
    q = _walk(d, f, f.beta, lambda x: _over_out(d, x), lambda k: k == 0, f.alpha_prime, "q")
    return p, q


# ---------------------------------------------------------------------------
# untongue


def _sides(d: Diagram, c: int) -> list[set[int]]:
    """Connected pieces of the crossing graph once ``c`` is removed."""
    parent = {i: i for i in range(d.n) if i != c}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (i, _), (j, _) in d._ends.values():
        if i != c and j != c:
            parent[find(i)] = find(j)
    groups: dict[int, set[int]] = {}
    for i in parent:
        groups.setdefault(find(i), set()).add(i)
    return list(groups.values())


def _turn_over_and_remove(d: Diagram, c: int, side: set[int]) -> Diagram:
    """Turn the piece ``side`` over (undoing the half twist at ``c``) and
    delete ``c``, joining its incoming ends straight to its outgoing ends."""
    f = Fragment.from_diagram(d)

    def m(s):
        if s[0] in side:
            return (s[0], (1 - s[1]) % 4)  # mirror the rotation, then change the crossing
        return s

    link = {m(a): m(b) for a, b in f.link.items()}
    heads = {m(h) for h in f.heads}
    oi, oo = (c, _over_in(d, c)), (c, _over_out(d, c))
    ui, uo = (c, 0), (c, 2)
    pairs = [(link[oi], link[oo]), (link[ui], link[uo])]
    for s in (oi, oo, ui, uo):
        del link[s]
    heads -= {oi, oo, ui, uo}
    for a, b in pairs:
        link[a], link[b] = b, a

    def shift(s):
        return (s[0] - 1, s[1]) if s[0] > c else s

    link = {shift(a): shift(b) for a, b in link.items()}
    heads = {shift(h) for h in heads}
    return Fragment(d.n - 1, link, heads, d.zero_components).to_diagram()


def _certify(before: Diagram, after: Diagram, max_crossings: int):
    if after.n and alternating_status(after).kind != "alternating":
        raise InvariantViolation("transformed diagram is not alternating")
    if max_crossings and normalized_bracket(before, max_crossings) != normalized_bracket(after, max_crossings):
        raise InvariantViolation("transformation changed the normalized bracket")


def separate_and_untongue(
    d: Diagram,
    f: DealternatorFrame,
    p: ArcSequence,
    q: ArcSequence,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
) -> Diagram:
    """Split ``A`` into ``A1``/``A2`` and return the alternating diagram.

    ``max_crossings=0`` skips the bracket certificate.
    """
    shared = set(p.crossings) & set(q.crossings)
    if shared:
        raise SeparationViolation(f"p and q sequences meet at crossings {sorted(shared)}")
    sides = _sides(d, f.d)
    a2 = next((s for s in sides if f.alpha in s), None)
    if a2 is None or f.beta in a2 or f.alpha_prime in a2:
        raise SeparationViolation("region A does not split into two disks")
    if not set(p.crossings) <= a2 or set(q.crossings) & a2:
        raise SeparationViolation("arc sequences straddle the two halves of A")
    out = _turn_over_and_remove(d, f.d, a2)
    _certify(d, out, max_crossings)
    return out


def partition(d: Diagram, f: DealternatorFrame) -> tuple[frozenset, frozenset]:
    """``(A1, A2)`` crossing sets, ``A2`` being the side containing ``alpha``."""
    sides = _sides(d, f.d)
    a2 = next(s for s in sides if f.alpha in s)
    a1 = next(s for s in sides if f.beta in s)
    return frozenset(a1), frozenset(a2)


# ---------------------------------------------------------------------------
# reducible inputs


def _remove_kink(d: Diagram, c: int) -> Diagram:
    f = Fragment.from_diagram(d)
    outside = [f.link[(c, k)] for k in range(4) if f.link[(c, k)][0] != c]
    if len(outside) != 2:
        raise PreconditionError(f"crossing {c} is not a kink")
    a, b = outside
    link = {s: t for s, t in f.link.items() if s[0] != c}
    link[a], link[b] = b, a
    heads = {h for h in f.heads if h[0] != c}

    def shift(s):
        return (s[0] - 1, s[1]) if s[0] > c else s

    link = {shift(x): shift(y) for x, y in link.items()}
    heads = {shift(h) for h in heads}
    if d.n == 1:
        return Diagram((), (), d.zero_components + 1)
    return Fragment(d.n - 1, link, heads, d.zero_components).to_diagram()


def _remove_clasp(d: Diagram, c: int, e: int) -> Diagram:
    """Reidemeister II removal of the clasp formed by crossings ``c`` and ``e``.

    Each strand is followed through the two crossings until it leaves them;
    a strand that only ever runs between them becomes a crossingless circle.
    """
    f = Fragment.from_diagram(d)
    pair = {c, e}
    link = {s: t for s, t in f.link.items() if s[0] not in pair and t[0] not in pair}
    heads = {h for h in f.heads if h[0] not in pair}
    through = {}  # entry slot at c <-> exit slot at e, one pair per strand
    for k in (0, 1):
        s_in, s_out = (c, k), (c, k + 2)
        if f.link[s_in][0] == e:
            s_in, s_out = s_out, s_in
        t = f.link[s_out]
        if t[0] != e or t[1] % 2 != k:
            raise PreconditionError(f"crossings {c} and {e} do not form a clasp")
        ex = (e, (t[1] + 2) % 4)
        through[s_in], through[ex] = ex, s_in
    used = set()
    for x, y in f.link.items():
        if x[0] in pair or y[0] not in pair:
            continue
        while y[0] in pair:
            used.add(min(y, through[y]))
            y = f.link[through[y]]
        link[x] = y
    loops = 0
    for start in {min(a, b) for a, b in through.items()} - used:
        if start in used:
            continue
        loops += 1
        y = start
        while min(y, through[y]) not in used:
            used.add(min(y, through[y]))
            y = f.link[through[y]]
    order = [i for i in range(d.n) if i not in pair]
    if not order:
        return Diagram((), (), d.zero_components + loops)
    ren = {old: new for new, old in enumerate(order)}
    link = {(ren[x[0]], x[1]): (ren[y[0]], y[1]) for x, y in link.items()}
    heads = {(ren[h[0]], h[1]) for h in heads}
    return Fragment(len(order), link, heads, d.zero_components + loops).to_diagram()


def reduce_trivial(d: Diagram, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> Diagram:
    """Alternating diagram for a positive almost alternating ``d`` whose
    dealternator is nugatory (a kink or a twisted connected sum) or sits in
    a clasp."""
    deal = _positive_almost_alternating(d)
    red = reducedness(d)
    for c in deal:
        if any(a[0] == c and b[0] == c for a, b in d._ends.values()):
            out = _remove_kink(d, c)
        elif c in red.nugatory:
            sides = _sides(d, c)
            alpha = _head(d, c, _over_out(d, c))[0]
            side = next(s for s in sides if alpha in s)
            out = _turn_over_and_remove(d, c, side)
        else:
            partner = next((a if b == c else b for a, b in red.clasps if c in (a, b)), None)
            if partner is None:
                continue
            out = _remove_clasp(d, c, partner)
        _certify(d, out, max_crossings)
        return out
    raise PreconditionError("dealternator is neither nugatory nor in a clasp")


# ---------------------------------------------------------------------------
# instances


def _negative_pattern(t: Tangle) -> Fragment:
    frag = t.fragment
    if not frag.is_alternating():
        raise PreconditionError("tangle is not alternating")
    pat = frag.boundary_pattern()
    if "-" in pat.values():
        raise PreconditionError("tangle has a crossingless boundary arc")
    if pat["NW"] == "o":
        frag = frag.rename_ports(ROTATE_90)
    return frag


def build_test_instance(a1: Tangle, a2: Tangle) -> TestInstance:
    """Positive almost alternating diagram ``D(A1 + [1] + A2)``.

    Both tangles are used in their negative boundary pattern (rotating a
    positive-pattern tangle by a quarter turn), so the single crossing
    between them is the dealternator.  It is nugatory: by the parity fact in
    the module docstring no positive almost alternating diagram is reduced.
    The result is II-reduced when the frame crossings are distinct.
    """
    f1, f2 = _negative_pattern(a1), _negative_pattern(a2)
    mid = Fragment.crossing(1)
    total = Fragment.tangle_sum(Fragment.tangle_sum(f1, mid), f2)
    raw = total.denominator().to_diagram()
    dc = f1.n
    for rev in _orientation_choices(raw):
        if all(s > 0 for s in signs_under_reversal(raw, rev)):
            diag = raw.reverse_components(rev)
            break
    else:
        raise PreconditionError("incompatible boundary orientations: no positive orientation")
    frame = _frame_at(diag, dc)
    if len(set(frame.crossings)) != 5:
        raise PreconditionError("frame crossings are not distinct (a tangle end crossing is shared)")
    st = alternating_status(diag)
    if st.kind != "almost_alternating" or dc not in st.dealternators:
        raise InvariantViolation("planted crossing is not a dealternator")
    return TestInstance(diag, frame, tuple(range(f1.n)), tuple(range(f1.n + 1, f1.n + 1 + f2.n)))


def trefoil_family(k: int) -> tuple[Diagram, int]:
    """Almost alternating trefoil diagrams with ``4 + k`` crossings.

    The trefoil is the denominator closure of the vertical three-twist; a
    horizontal ``[-k]`` twist (an unknot after closure) is attached through
    a single mismatched crossing ``d``, returned with the diagram.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    from .tangle import tangle_diagram

    left = tangle_diagram((-3, 0)).fragment
    right = tangle_diagram((-k,)).fragment
    total = Fragment.tangle_sum(Fragment.tangle_sum(left, Fragment.crossing(1)), right)
    return total.denominator().to_diagram(), left.n


def add_bad_kink(d: Diagram) -> tuple[Diagram, int]:
    """Positive almost alternating diagram: ``d`` plus a positive kink.

    ``d`` must be positive and alternating.  The kink is put on the edge
    entering crossing 0 from below, passing over first, so both edges next
    to it fail to alternate.  Returns the diagram and the kink crossing.
    """
    if d.n == 0 or alternating_status(d).kind != "alternating":
        raise PreconditionError("input must be a non-empty alternating diagram")
    if not positivity_status(d).is_positive:
        raise PreconditionError("input must be positive under its orientation")
    f = Fragment.from_diagram(d)
    c, h = d.n, (0, 0)
    link, heads = dict(f.link), set(f.heads)
    t = link[h]
    for a, b in ((t, (c, 1)), ((c, 3), (c, 0)), ((c, 2), h)):
        link[a], link[b] = b, a
    heads |= {(c, 1), (c, 0)}
    out = Fragment(c + 1, link, heads, f.loops).to_diagram()
    if out.signs()[c] != 1:
        raise InvariantViolation("kink has the wrong sign")  # pragma: no cover
    return out, c
