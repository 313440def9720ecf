"""Montesinos links: standard diagrams, positivity, and almost-PA diagrams.

``C(f1, ..., fn)`` is the numerator closure of the horizontal sum of the
rational tangles ``f1 .. fn`` (left to right).  Positivity of the standard
diagram is decided tangle by tangle: between neighbouring tangles the top
and the bottom strand each run either rightward or leftward, and a tangle
accepts a pair of junction states when the boundary orientation they induce
makes all of its crossings positive.  The link is positive when these
transitions close up around the cycle.

``almost_pa`` produces a diagram one crossing change away from a
positive alternating one.  Three routes are used:

(a) some tangle is ``inf``: the link is a connected sum of the denominator
    closures of the other tangles; the summands are spliced so the junctions
    alternate, and a negative kink is added;
(b) every ``|alpha/beta| >= 1``: the standard diagram is already positive
    and alternating, and a negative kink is added;
(c) otherwise: write ``f_i = k_i + g_i`` with ``0 < g_i < 1`` and push all
    integer parts into one twist ``[e]``.  Drawing the ``g_i`` (or the
    ``g_i - 1``) with sign-coherent vectors gives an alternating diagram
    when the twist matches their pattern (a kink is then added), and an
    almost alternating one when the twist is a single crossing of the other
    sign; that crossing is the dealternator.  With ``m`` fractional tangles
    this covers ``e >= -1`` and ``e <= 1 - m``; anything in between raises
    :class:`UnsupportedSpec`.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import NamedTuple, Sequence

from .bracket import DEFAULT_MAX_CROSSINGS, normalized_bracket
from .diagram import (
    Diagram,
    _edge_alternates,
    _orientation_choices,
    admits_positive_orientation,
    alternating_status,
    parse_pd,
    positivity_status,
    signs_under_reversal,
    unknot,
)
from .orientation import OrientedTangle, propagate
from .planar import Fragment, _opp
from .tangle import (
    TangleFraction,
    canonical_vector,
    format_conway,
    fraction_of,
    parse_conway,
    tangle_diagram,
)

#: crossings added by ``pa_to_almost_pa`` (one negative kink)
KINK_OVERHEAD = 1


class PreconditionError(ValueError):
    """The input does not satisfy an operation's hypothesis."""


class UnsupportedSpec(PreconditionError):
    """Positive spec outside the cases the route (c) construction covers."""


class InvariantViolation(RuntimeError):
    """A check that must hold for valid inputs failed."""


# ---------------------------------------------------------------------------
# specs


@dataclass(frozen=True)
class MontesinosSpec:
    tangles: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.tangles:
            raise ValueError("a Montesinos spec needs at least one tangle")
        object.__setattr__(self, "tangles", tuple(tuple(int(a) for a in t) for t in self.tangles))

    @classmethod
    def from_fractions(cls, fracs: Sequence) -> "MontesinosSpec":
        out = []
        for f in fracs:
            if isinstance(f, str):
                f = TangleFraction.parse(f)
            elif not isinstance(f, TangleFraction):
                f = TangleFraction(*f)
            out.append(canonical_vector(f))
        return cls(tuple(out))

    @classmethod
    def parse(cls, text: str) -> "MontesinosSpec":
        """``"C(3/2, -1/3, inf)"``; entries may also be Conway vectors ``[2,1]``."""
        m = re.fullmatch(r"\s*C\s*\((.*)\)\s*", text)
        if not m:
            raise ValueError(f"malformed Montesinos notation {text!r}")
        tokens = re.findall(r"\[[^\]]*\]|[^,\s]+", m.group(1))
        if not tokens:
            raise ValueError("empty Montesinos spec")
        out = []
        for tok in tokens:
            if tok.startswith("["):
                out.append(parse_conway(tok))
            else:
                try:
                    out.append(canonical_vector(TangleFraction.parse(tok)))
                except ValueError as exc:
                    raise ValueError(f"bad tangle fraction {tok!r}") from exc
        return cls(tuple(out))

    @property
    def fractions(self) -> tuple[TangleFraction, ...]:
        return tuple(fraction_of(t) for t in self.tangles)

    @property
    def crossing_count(self) -> int:
        return sum(abs(a) for t in self.tangles for a in t)

    def __str__(self):
        return "C(" + ",".join(str(f) for f in self.fractions) + ")"

    def conway_str(self) -> str:
        return "C(" + ",".join(format_conway(t) for t in self.tangles) + ")"


@dataclass(frozen=True)
class StandardDiagram:
    spec: MontesinosSpec
    diagram: Diagram
    slots: tuple[range, ...]
    tangles: tuple[OrientedTangle, ...] | None  # None when no positive orientation exists
    fragment: Fragment = field(repr=False, compare=False)

    @property
    def positive(self) -> bool:
        return self.tangles is not None


@dataclass(frozen=True)
class MarkedDiagram:
    diagram: Diagram
    d: int
    route: str = ""
    info: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if not 0 <= self.d < self.diagram.n:
            raise ValueError(f"marked crossing {self.d} is not a crossing of the diagram")

    def changed(self) -> Diagram:
        return self.diagram.crossing_change(self.d)

    def to_dict(self) -> dict:
        out = {"pd": [list(t) for t in self.diagram.crossings], "d": self.d}
        if self.diagram.zero_components:
            out["zero_components"] = self.diagram.zero_components
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "MarkedDiagram":
        obj = json.loads(text)
        d = parse_pd({"pd": obj["pd"], "zero_components": obj.get("zero_components", 0)})
        return cls(d, int(obj["d"]))


# ---------------------------------------------------------------------------
# junction states and positivity

_DIRS = ("r", "l")
_STATES = tuple(product(_DIRS, _DIRS))  # (top, bottom)


def _boundary(left, right) -> dict[str, str]:
    (lt, lb), (rt, rb) = left, right
    return {
        "NW": "in" if lt == "r" else "out",
        "SW": "in" if lb == "r" else "out",
        "NE": "in" if rt == "l" else "out",
        "SE": "in" if rb == "l" else "out",
    }


@lru_cache(maxsize=None)
def positive_transitions(cv: tuple[int, ...]) -> dict:
    """``left state -> [right states]`` keeping every crossing of ``cv`` positive."""
    t = tangle_diagram(cv)
    table: dict = {}
    for left, right in product(_STATES, _STATES):
        b = _boundary(left, right)
        if sum(v == "in" for v in b.values()) != 2:
            continue
        try:
            ot = propagate(t, b)
        except ValueError:
            continue
        if ot.all_positive:
            table.setdefault(left, []).append(right)
    return table


def positive_junctions(spec: MontesinosSpec):
    """Junction states ``s_0 .. s_(n-1)`` (``s_k`` left of tangle ``k``) making
    the standard diagram positive, or ``None``.  Deterministic: the first
    solution in lexicographic search order."""
    tables = [positive_transitions(t) for t in spec.tangles]
    n = len(tables)
    for start in _STATES:
        path = [start]

        def dfs(k):
            if k == n:
                return path[-1] == start
            for nxt in tables[k].get(path[-1], ()):
                path.append(nxt)
                if dfs(k + 1):
                    return True
                path.pop()
            return False

        if dfs(0):
            return tuple(path[:-1])
    return None


def is_positive_spec(spec: MontesinosSpec) -> bool:
    """Does the standard diagram admit an all-positive orientation?"""
    tables = [positive_transitions(t) for t in spec.tangles]
    for start in _STATES:
        reach = {start}
        for tab in tables:
            reach = {r for s in reach for r in tab.get(s, ())}
            if not reach:
                break
        if start in reach:
            return True
    return False


# ---------------------------------------------------------------------------
# standard diagram


def _sum_fragments(frags: Sequence[Fragment]) -> tuple[Fragment, tuple[range, ...]]:
    total = frags[0]
    slots = [range(0, frags[0].n)]
    for f in frags[1:]:
        slots.append(range(total.n, total.n + f.n))
        total = Fragment.tangle_sum(total, f)
    return total, tuple(slots)


@lru_cache(maxsize=4096)
def _oriented(cv: tuple[int, ...], left, right) -> OrientedTangle:
    return propagate(tangle_diagram(cv), _boundary(left, right))


def build_standard(spec: MontesinosSpec) -> StandardDiagram:
    tangles = [tangle_diagram(cv) for cv in spec.tangles]
    states = positive_junctions(spec)
    oriented = None
    if states is not None:
        n = len(tangles)
        oriented = tuple(
            _oriented(spec.tangles[k], states[k], states[(k + 1) % n]) for k in range(n)
        )
        frags = [ot.fragment for ot in oriented]
    else:
        frags = [t.fragment for t in tangles]
    total, slots = _sum_fragments(frags)
    closed = total.numerator()
    return StandardDiagram(spec, closed.to_diagram(), slots, oriented, closed)


def verify_standard_alternating(spec: MontesinosSpec) -> bool:
    fracs = spec.fractions
    if any(f.is_infinite for f in fracs):
        raise PreconditionError("every tangle must have beta != 0")
    if any(abs(f.alpha) < f.beta for f in fracs):
        raise PreconditionError("every tangle must have |alpha/beta| >= 1")
    if not is_positive_spec(spec):
        raise PreconditionError("standard diagram admits no positive orientation")
    return alternating_status(build_standard(spec).diagram).kind == "alternating"


# ---------------------------------------------------------------------------
# infinity tangles: connected sums


class Summand(NamedTuple):
    """Denominator closure of one tangle, with its two junction edges.

    ``left``/``right`` are the labels of the edges created by closing the
    west and east sides; ``None`` means that side is a crossingless circle.
    """

    diagram: Diagram
    left: int | None
    right: int | None


def _closure_summand(frag: Fragment) -> Summand:
    west = (frag.link["NW"], frag.link["SW"])
    east = (frag.link["NE"], frag.link["SE"])
    closed = frag.denominator()
    d = closed.to_diagram()
    smap = closed.slot_map()

    def label(pair):
        if any(isinstance(s, str) for s in pair):
            return None
        return d._slot_label[smap[pair[0]]]

    return Summand(d, label(west), label(east))


def _infinity_index_check(spec: MontesinosSpec, j: int):
    if not 0 <= j < len(spec.tangles):
        raise IndexError(f"no tangle {j}")
    if not spec.fractions[j].is_infinite:
        raise PreconditionError(f"tangle {j} is not the infinity tangle")


def infinity_summands(spec: MontesinosSpec, j: int) -> list[Summand]:
    _infinity_index_check(spec, j)
    std = build_standard(spec)
    frags = [ot.fragment for ot in std.tangles] if std.positive else [tangle_diagram(t).fragment for t in spec.tangles]
    n = len(frags)
    order = [(j + 1 + k) % n for k in range(n - 1)]
    return [_closure_summand(frags[k]) for k in order]


def decompose_infinity(spec: MontesinosSpec, j: int) -> list[Diagram]:
    """Denominator closures of the tangles after ``j``, cyclically."""
    return [s.diagram for s in infinity_summands(spec, j)]


class AlignedSum(NamedTuple):
    diagram: Diagram
    slides: int


def align_connected_sum(summands: Sequence[Summand]) -> AlignedSum:
    """Chain ``summands`` by connected sums (east side of one to the west side
    of the next), processing right to left.

    Where a junction would join two edges of different type (one leaving an
    over-crossing, one leaving an under-crossing) the splice point on the
    already-built part is slid one edge forward along the same component,
    which is an isotopy and makes the junction alternate.
    """
    for s in summands:
        if s.diagram.n and not is_alternating_diagram(s.diagram):
            raise PreconditionError("every summand must be alternating")
    acc: Fragment | None = None
    acc_left = None
    slides = 0
    for s in reversed(summands):
        d = s.diagram
        if d.n == 0 and d.zero_components == 1 and s.left is None and s.right is None:
            continue  # a trivial summand
        f = Fragment.from_diagram(d)
        if acc is None:
            acc, acc_left = f, (d._ends[s.left][1] if s.left is not None else None)
            continue
        g = Fragment.disjoint(f, acc)
        off = f.n
        h2 = None if acc_left is None else (acc_left[0] + off, acc_left[1])
        if s.right is None or h2 is None:
            g.loops -= 1  # the circle on one side is absorbed
        else:
            t1, h1 = d._ends[s.right]
            t2 = g.link[h2]
            if t1[1] % 2 != t2[1] % 2:
                t2 = _opp(h2)
                h2 = g.link[t2]
                slides += 1
            g.link[t1], g.link[h2] = h2, t1
            g.link[t2], g.link[h1] = h1, t2
        acc = g
        acc_left = d._ends[s.left][1] if s.left is not None else None
    if acc is None:
        return AlignedSum(unknot(1), 0)
    out = acc.to_diagram()
    if out.n and not is_alternating_diagram(out):
        raise InvariantViolation("connected sum is not alternating after alignment")
    return AlignedSum(out, slides)


def is_alternating_diagram(d: Diagram) -> bool:
    return alternating_status(d).kind == "alternating"


# ---------------------------------------------------------------------------
# kinks


def _negative_kink_unknot(circles: int) -> Diagram:
    for pd in ([[1, 2, 2, 1]], [[2, 1, 1, 2]], [[1, 1, 2, 2]], [[2, 2, 1, 1]]):
        d = parse_pd({"pd": pd, "zero_components": circles - 1})
        if d.signs() == (-1,):
            return d
    raise InvariantViolation("no negative kink found")  # pragma: no cover


def pa_to_almost_pa(d: Diagram) -> MarkedDiagram:
    """Add a negative kink whose first pass is an over-pass.

    The kink sits on the edge entering crossing 0 from below.  In an
    alternating diagram that edge leaves an over-crossing, so both edges next
    to the kink fail to alternate; changing the kink crossing repairs them
    and turns it into a positive kink.
    """
    if not (d.n == 0 or is_alternating_diagram(d)):
        raise PreconditionError("input diagram is not alternating")
    if not admits_positive_orientation(d):
        raise PreconditionError("input diagram admits no positive orientation")
    if d.n == 0:
        if d.zero_components == 0:
            raise PreconditionError("empty diagram")
        return MarkedDiagram(_negative_kink_unknot(d.zero_components), 0, info={"kink": True})
    f = Fragment.from_diagram(d)
    c = d.n
    h = (0, 0)
    t = f.link[h]
    link = dict(f.link)
    heads = set(f.heads)
    for a, b in ((t, (c, 1)), ((c, 3), (c, 2)), ((c, 0), h)):
        link[a], link[b] = b, a
    heads |= {(c, 1), (c, 2)}
    out = Fragment(c + 1, link, heads, f.loops).to_diagram()
    if out.signs()[c] != -1:
        raise InvariantViolation("kink has the wrong sign")  # pragma: no cover
    return MarkedDiagram(out, c, info={"kink": True})


# ---------------------------------------------------------------------------
# route (c): normal form


def normal_form(spec: MontesinosSpec) -> tuple[int, tuple[TangleFraction, ...]]:
    """``(e, (g_1, ..)))`` with each ``f_i = k_i + g_i``, ``0 < g_i < 1`` and
    ``e = sum k_i``; integer tangles contribute only to ``e``."""
    e, gs = 0, []
    for f in spec.fractions:
        if f.is_infinite:
            raise PreconditionError("normal form needs finite fractions")
        k = math.floor(f.value)
        e += k
        g = f.value - k
        if g:
            gs.append(TangleFraction(g.numerator, g.denominator))
    return e, tuple(gs)


def _orientations_matching(d: Diagram, target, allowed_negative: frozenset, max_crossings: int):
    for rev in _orientation_choices(d):
        s = signs_under_reversal(d, rev)
        if any(x < 0 and i not in allowed_negative for i, x in enumerate(s)):
            continue
        cand = d.reverse_components(rev)
        if normalized_bracket(cand, max_crossings) == target:
            return cand
    return None


def _check_pa_tangles(d: Diagram, slots: Sequence[range]) -> int:
    """Right-to-left partial sums of the fractional tangles must be PA-tangles."""
    signs = d.signs()
    inside: set[int] = set()
    steps = 0
    for r in reversed(slots):
        inside |= set(r)
        steps += 1
        if any(signs[i] < 0 for i in inside):
            raise InvariantViolation(f"partial tangle {steps} has a negative crossing")
        for lab, ((i, _), (j, _)) in d._ends.items():
            if i in inside and j in inside and not _edge_alternates(d, lab):
                raise InvariantViolation(f"partial tangle {steps} is not alternating")
    return steps


def _normal_form_candidates(e: int, gs: Sequence[TangleFraction]):
    """``(pattern, twist, fractions, almost)`` forms that can work for ``e``.

    The positive pattern uses ``g_i`` with twist ``e``; the negative pattern
    uses ``g_i - 1`` with twist ``e + m``.  A form is alternating when the
    twist agrees with the pattern (or is zero) and has one bad crossing when
    the twist is a single crossing of the other sign.
    """
    m = len(gs)
    pos = tuple(gs)
    neg = tuple(TangleFraction(g.alpha - g.beta, g.beta) for g in gs)
    if e >= 0:
        yield "positive", e, pos, False
    if e + m <= 0:
        yield "negative", e + m, neg, False
    if e == -1:
        yield "positive", e, pos, True
    if e + m == 1:
        yield "negative", e + m, neg, True


def _route_c(spec: MontesinosSpec, target, max_crossings: int) -> MarkedDiagram:
    e, gs = normal_form(spec)
    candidates = list(_normal_form_candidates(e, gs))
    if not candidates:
        raise UnsupportedSpec(
            f"{spec}: integer part e={e} with {len(gs)} fractional tangles; every single-twist "
            f"form keeps {min(-e, len(gs) + e)} non-alternating twist crossings"
        )
    for pattern, twist, parts, almost in candidates:
        frags, offset = [], 0
        if twist:
            frags.append(tangle_diagram((twist,)).fragment)
            offset = 1
        frags.extend(tangle_diagram(canonical_vector(g)).fragment for g in parts)
        if not frags:
            frags = [Fragment.zero()]
        total, slots = _sum_fragments(frags)
        raw = total.numerator().to_diagram()
        allowed = frozenset((slots[0][0],)) if almost else frozenset()
        base = _orientations_matching(raw, target, allowed, max_crossings)
        if base is None:
            continue
        steps = _check_pa_tangles(base, slots[offset:])
        info = {"e": e, "pattern": pattern, "absorptions": steps}
        if almost:
            info.update(kink=False, positive=all(s > 0 for s in base.signs()))
            return MarkedDiagram(base, slots[0][0], "c", info)
        if base.n == 0:
            out = pa_to_almost_pa(base)
        else:
            if not is_alternating_diagram(base):
                raise InvariantViolation(f"{spec}: {pattern} normal form is not alternating")
            out = pa_to_almost_pa(base)
        info.update(kink=True, positive=False)
        return MarkedDiagram(out.diagram, out.d, "c", info)
    raise InvariantViolation(f"{spec}: no normal form orientation matches the link")


# ---------------------------------------------------------------------------
# top level


def route_of(spec: MontesinosSpec) -> str:
    fracs = spec.fractions
    if any(f.is_infinite for f in fracs):
        return "a"
    if all(abs(f.alpha) >= f.beta for f in fracs):
        return "b"
    return "c"


def almost_pa(spec: MontesinosSpec, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> MarkedDiagram:
    std = build_standard(spec)
    if not std.positive:
        raise PreconditionError(f"{spec}: standard diagram admits no positive orientation")
    route = route_of(spec)
    if route == "a":
        j = next(k for k, f in enumerate(spec.fractions) if f.is_infinite)
        aligned = align_connected_sum(infinity_summands(spec, j))
        out = pa_to_almost_pa(aligned.diagram)
        return MarkedDiagram(out.diagram, out.d, "a", {"slides": aligned.slides, "kink": True})
    if route == "b":
        if not is_alternating_diagram(std.diagram):
            raise InvariantViolation(f"{spec}: positive standard diagram is not alternating")
        out = pa_to_almost_pa(std.diagram)
        return MarkedDiagram(out.diagram, out.d, "b", {"kink": True})
    return _route_c(spec, normalized_bracket(std.diagram, max_crossings), max_crossings)


def check_marked(m: MarkedDiagram, reference: Diagram, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> dict:
    """The three almost-PA conditions, each as a boolean."""
    changed = m.changed()
    return {
        "bracket_equal": normalized_bracket(m.diagram, max_crossings) == normalized_bracket(reference, max_crossings),
        "changed_alternating": changed.n == 0 or is_alternating_diagram(changed),
        "changed_positive": positivity_status(changed).admits_positive_orientation,
    }
