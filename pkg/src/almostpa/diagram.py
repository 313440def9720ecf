"""Oriented link diagrams in PD notation and their combinatorial predicates.

Conventions
-----------
Each crossing is a 4-tuple of edge labels listed counterclockwise, starting
at the incoming under-strand.  The under-strand runs position 0 -> 2, the
over-strand occupies positions 1 and 3; ``over_in[i]`` is True when it enters
at position 1.  A crossing is positive exactly in that case: turning the
under-direction a quarter turn counterclockwise gives the over-direction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import NamedTuple, Sequence

from .planar import Fragment, OrientationError


class DiagramError(ValueError):
    """Malformed or non-planar diagram data."""


class Face(NamedTuple):
    boundary: tuple[tuple[int, str], ...]  # (edge label, "L" or "R")
    corners: tuple[int, ...]  # crossing indices in traversal order


class AlternatingStatus(NamedTuple):
    kind: str  # "alternating" | "almost_alternating" | "neither"
    dealternators: tuple[int, ...] = ()

    @property
    def is_alternating(self) -> bool:
        return self.kind == "alternating"


class PositivityStatus(NamedTuple):
    is_positive: bool
    admits_positive_orientation: bool
    witness: tuple[int, ...] | None  # components to reverse


class Reducedness(NamedTuple):
    reduced: bool
    ii_reduced: bool
    nugatory: tuple[int, ...]
    clasps: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[tuple[int, int, int, int], ...]
    over_in: tuple[bool, ...]
    zero_components: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(x) for x in c) for c in self.crossings))
        object.__setattr__(self, "over_in", tuple(bool(x) for x in self.over_in))
        if len(self.over_in) != len(self.crossings):
            raise DiagramError("one over-direction flag per crossing required")
        if self.zero_components < 0:
            raise DiagramError("zero_components must be non-negative")
        self._validate()

    # -- derived structure ---------------------------------------------
    @cached_property
    def _ends(self) -> dict[int, tuple[tuple[int, int], tuple[int, int]]]:
        """label -> (tail slot, head slot)."""
        tails: dict[int, list] = {}
        heads: dict[int, list] = {}
        for i, (t, flag) in enumerate(zip(self.crossings, self.over_in)):
            for k, lab in enumerate(t):
                is_head = k == 0 or (k == 1 and flag) or (k == 3 and not flag)
                (heads if is_head else tails).setdefault(lab, []).append((i, k))
        labels = set(tails) | set(heads)
        out = {}
        for lab in labels:
            tl, hd = tails.get(lab, []), heads.get(lab, [])
            if len(tl) + len(hd) != 2:
                raise DiagramError(f"edge label {lab} appears {len(tl) + len(hd)} times")
            if len(tl) != 1:
                raise DiagramError(f"edge label {lab} is not consistently oriented")
            out[lab] = (tl[0], hd[0])
        return out

    @cached_property
    def _slot_label(self) -> dict[tuple[int, int], int]:
        return {(i, k): lab for i, t in enumerate(self.crossings) for k, lab in enumerate(t)}

    def _partner(self, s):
        lab = self._slot_label[s]
        a, b = self._ends[lab]
        return b if a == s else a

    def _validate(self):
        for lab in (x for t in self.crossings for x in t):
            if lab <= 0:
                raise DiagramError("edge labels must be positive integers")
        ends = self._ends
        n = len(self.crossings)
        if n == 0:
            return
        # Euler check per connected piece: V - E + F = 2 with E = 2V.
        comp = list(range(n))

        def find(x):
            while comp[x] != x:
                comp[x] = comp[comp[x]]
                x = comp[x]
            return x

        for (i, _), (j, _) in ends.values():
            comp[find(i)] = find(j)
        faces_per = {}
        for f in self.faces():
            if not f.corners:
                continue
            r = find(f.corners[0])
            faces_per[r] = faces_per.get(r, 0) + 1
        verts_per = {}
        for i in range(n):
            verts_per[find(i)] = verts_per.get(find(i), 0) + 1
        for r, v in verts_per.items():
            if faces_per.get(r, 0) != v + 2:
                raise DiagramError("rotation data is not planar (Euler characteristic fails)")

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def labels(self) -> list[int]:
        return sorted(self._ends)

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Edge labels of each crossing-carrying component in traversal order,
        components sorted by their smallest label."""
        seen = set()
        comps = []
        for lab in sorted(self._ends):
            if lab in seen:
                continue
            seq = []
            cur = lab
            while cur not in seen:
                seen.add(cur)
                seq.append(cur)
                i, k = self._ends[cur][1]
                cur = self._slot_label[(i, (k + 2) % 4)]
            comps.append(tuple(seq))
        return tuple(comps)

    @cached_property
    def component_of(self) -> dict[int, int]:
        return {lab: ci for ci, c in enumerate(self.components) for lab in c}

    @property
    def num_components(self) -> int:
        return len(self.components) + self.zero_components

    def crossing_strands(self, i: int) -> tuple[int, int]:
        """(under component, over component) of crossing ``i``."""
        t = self.crossings[i]
        return self.component_of[t[0]], self.component_of[t[1]]

    # -- faces -----------------------------------------------------------
    def faces(self) -> list[Face]:
        """Faces of the planar map; each edge-side appears in exactly one.

        A crossingless circle contributes two empty faces.
        """
        seen = set()
        faces = []
        for i in range(len(self.crossings)):
            for k in range(4):
                start = (i, k)
                if start in seen:
                    continue
                bnd, corners = [], []
                s = start
                while s not in seen:
                    seen.add(s)
                    lab = self._slot_label[s]
                    tail, head = self._ends[lab]
                    side = "L" if tail == s else "R"
                    bnd.append((lab, side))
                    j, l = self._partner(s)
                    corners.append(j)
                    s = (j, (l - 1) % 4)
                faces.append(Face(tuple(bnd), tuple(corners)))
        for _ in range(self.zero_components):
            faces.extend([Face((), ()), Face((), ())])
        return faces

    # -- signs -----------------------------------------------------------
    def signs(self) -> tuple[int, ...]:
        return tuple(1 if f else -1 for f in self.over_in)

    def writhe(self) -> int:
        return sum(self.signs())

    # -- edits -----------------------------------------------------------
    def crossing_change(self, c: int) -> "Diagram":
        if not 0 <= c < self.n:
            raise IndexError(f"no crossing {c}")
        cr, fl = list(self.crossings), list(self.over_in)
        a, b, cc, d = cr[c]
        if fl[c]:
            cr[c], fl[c] = (b, cc, d, a), False
        else:
            cr[c], fl[c] = (d, a, b, cc), True
        return Diagram(tuple(cr), tuple(fl), self.zero_components)

    def mirror(self) -> "Diagram":
        out = self
        for c in range(self.n):
            out = out.crossing_change(c)
        return out

    def reverse_component(self, k: int) -> "Diagram":
        if not 0 <= k < len(self.components):
            raise IndexError(f"no component {k}")
        comp = self.components[k]
        relabel = dict(zip(reversed(comp), sorted(comp)))
        s = set(comp)
        cr, fl = [], []
        for t, flag in zip(self.crossings, self.over_in):
            under_in, over_in_comp = t[0] in s, t[1] in s
            if under_in:
                t = (t[2], t[3], t[0], t[1])
                flag = flag if over_in_comp else not flag
            elif over_in_comp:
                flag = not flag
            cr.append(tuple(relabel.get(x, x) for x in t))
            fl.append(flag)
        return Diagram(tuple(cr), tuple(fl), self.zero_components)

    def reverse_components(self, ks: Sequence[int]) -> "Diagram":
        # Component indices are stable under reversal (label sets are kept).
        out = self
        for k in ks:
            out = out.reverse_component(k)
        return out

    def relabeled(self) -> "Diagram":
        """Canonical relabelling: consecutive labels along components."""
        return Fragment.from_diagram(self).to_diagram()

    # -- serialisation ---------------------------------------------------
    def to_json(self) -> str:
        pd = [list(t) for t in self.crossings]
        if self.zero_components == 0:
            return json.dumps(pd)
        return json.dumps({"pd": pd, "zero_components": self.zero_components})


# ---------------------------------------------------------------------------
# parsing


def _infer_over_directions(crossings: Sequence[Sequence[int]]) -> tuple[bool, ...]:
    where: dict[int, list] = {}
    for i, t in enumerate(crossings):
        if len(t) != 4:
            raise DiagramError(f"crossing {i} does not have four labels")
        for k, lab in enumerate(t):
            if not isinstance(lab, int) or isinstance(lab, bool) or lab <= 0:
                raise DiagramError(f"bad edge label {lab!r}")
            where.setdefault(lab, []).append((i, k))
    for lab, occ in where.items():
        if len(occ) != 2:
            raise DiagramError(f"edge label {lab} appears {len(occ)} times")

    def partner(s):
        a, b = where[crossings[s[0]][s[1]]]
        return b if a == s else a

    head: dict = {}

    def assign(s, is_head):
        stack = [(s, is_head)]
        while stack:
            s, h = stack.pop()
            if s in head:
                if head[s] != h:
                    raise DiagramError("edge orientations are inconsistent")
                continue
            head[s] = h
            stack.append((partner(s), not h))
            stack.append(((s[0], (s[1] + 2) % 4), not h))

    for i in range(len(crossings)):
        assign((i, 0), True)
    for i, t in enumerate(crossings):
        if (i, 1) in head:
            continue
        # this strand never passes under anything: fall back on label succession
        labels = []
        s = (i, 1)
        while True:
            labels.append(crossings[s[0]][s[1]])
            p = partner(s)
            s = (p[0], (p[1] + 2) % 4)
            if s == (i, 1):
                break
        ordered = sorted(set(labels))
        succ = {x: ordered[(j + 1) % len(ordered)] for j, x in enumerate(ordered)}
        assign((i, 1), succ[t[1]] == t[3])
    return tuple(head[(i, 1)] for i in range(len(crossings)))


def parse_pd(text: str | Sequence, zero_components: int | None = None) -> Diagram:
    """Parse PD JSON (array of 4-arrays, or the object form) into a Diagram."""
    if isinstance(text, str):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise DiagramError(f"malformed PD text: {e}") from None
    else:
        data = text
    orientation = None
    zc = 0
    if isinstance(data, dict):
        if "pd" not in data:
            raise DiagramError("PD object needs a 'pd' field")
        zc = int(data.get("zero_components", 0))
        orientation = data.get("orientation")
        data = data["pd"]
    if zero_components is not None:
        zc = zero_components
    if not isinstance(data, list) or not all(isinstance(t, list) for t in data):
        raise DiagramError("PD code must be a list of 4-element lists")
    crossings = [tuple(t) for t in data]
    over_in = _infer_over_directions(crossings)
    d = Diagram(tuple(crossings), over_in, zc)
    if orientation is not None:
        if len(orientation) != len(d.components):
            raise DiagramError("orientation needs one entry per component")
        d = d.reverse_components([k for k, s in enumerate(orientation) if s == -1])
    return d


def unknot(circles: int = 1) -> Diagram:
    return Diagram((), (), circles)


# ---------------------------------------------------------------------------
# predicates


def orient_and_sign(d: Diagram) -> tuple[tuple[int, ...], int]:
    s = d.signs()
    return s, sum(s)


def _edge_alternates(d: Diagram, lab: int, flipped: frozenset = frozenset()) -> bool:
    (i, k), (j, l) = d._ends[lab]
    pi = k % 2 ^ (i in flipped)
    pj = l % 2 ^ (j in flipped)
    return pi != pj


def is_alternating(d: Diagram) -> bool:
    return all(_edge_alternates(d, lab) for lab in d._ends)


def alternating_status(d: Diagram) -> AlternatingStatus:
    bad = [lab for lab in d._ends if not _edge_alternates(d, lab)]
    if not bad:
        return AlternatingStatus("alternating")
    # A single change at c flips the parity of c's four slots; only crossings
    # touching every bad edge can repair all of them.
    cands = None
    for lab in bad:
        (i, _), (j, _) = d._ends[lab]
        here = {i, j}
        cands = here if cands is None else cands & here
    deal = []
    for c in sorted(cands or ()):
        if all(_edge_alternates(d, lab, frozenset((c,))) for lab in d._ends):
            deal.append(c)
    if deal:
        return AlternatingStatus("almost_alternating", tuple(deal))
    return AlternatingStatus("neither")


def _orientation_choices(d: Diagram):
    m = len(d.components)
    for bits in product((0, 1), repeat=m):
        yield tuple(k for k in range(m) if bits[k])


def signs_under_reversal(d: Diagram, reversed_comps) -> tuple[int, ...]:
    r = set(reversed_comps)
    out = []
    for i, s in enumerate(d.signs()):
        u, o = d.crossing_strands(i)
        out.append(-s if (u in r) != (o in r) else s)
    return tuple(out)


def positivity_status(d: Diagram) -> PositivityStatus:
    is_pos = all(s > 0 for s in d.signs())
    if is_pos:
        return PositivityStatus(True, True, ())
    for rev in _orientation_choices(d):
        if all(s > 0 for s in signs_under_reversal(d, rev)):
            return PositivityStatus(False, True, rev)
    return PositivityStatus(False, False, None)


def admits_positive_orientation(d: Diagram) -> bool:
    return positivity_status(d).admits_positive_orientation


def admits_negative_orientation(d: Diagram) -> bool:
    return any(all(s < 0 for s in signs_under_reversal(d, rev)) for rev in _orientation_choices(d))


def positive_orientation(d: Diagram) -> Diagram:
    """Re-orient ``d`` so that every crossing is positive."""
    st = positivity_status(d)
    if not st.admits_positive_orientation:
        raise OrientationError("diagram admits no positive orientation")
    return d.reverse_components(st.witness)


def reducedness(d: Diagram) -> Reducedness:
    nug = set()
    clasps = []
    for f in d.faces():
        seen = set()
        for c in f.corners:
            if c in seen:
                nug.add(c)
            seen.add(c)
        if len(f.corners) == 2 and f.corners[0] != f.corners[1]:
            for lab, _ in f.boundary:
                (i, k), (j, l) = d._ends[lab]
                if k % 2 == 1 and l % 2 == 1:
                    clasps.append(tuple(sorted((i, j))))
                    break
    return Reducedness(not nug, not clasps, tuple(sorted(nug)), tuple(sorted(set(clasps))))


def edit(d: Diagram, kind: str, arg: int | None = None) -> Diagram:
    if kind == "crossing_change":
        return d.crossing_change(arg)
    if kind == "mirror":
        return d.mirror()
    if kind == "reverse_component":
        return d.reverse_component(arg)
    raise ValueError(f"unknown edit {kind!r}")


def connected_sum(d1: Diagram, e1: int | None, d2: Diagram, e2: int | None) -> Diagram:
    """Oriented connected sum obtained by cutting edge ``e1`` of ``d1`` and
    ``e2`` of ``d2`` and cross-splicing the four ends.

    A crossingless summand is passed with ``e = None`` and consumes one of its
    circles.
    """
    if d2.n == 0:
        if d2.zero_components == 0:
            raise DiagramError("empty summand")
        return Diagram(d1.crossings, d1.over_in, d1.zero_components + d2.zero_components - 1)
    if d1.n == 0:
        return connected_sum(d2, e2, d1, e1)
    for d, e in ((d1, e1), (d2, e2)):
        if e not in d._ends:
            raise DiagramError(f"edge {e} is not an edge of the summand")
    f1 = Fragment.from_diagram(d1)
    f2 = Fragment.from_diagram(d2)
    (t1, h1), (t2, h2) = d1._ends[e1], d2._ends[e2]
    off = d1.n
    t2, h2 = (t2[0] + off, t2[1]), (h2[0] + off, h2[1])
    f = Fragment.disjoint(f1, f2)
    f.link[t1], f.link[h2] = h2, t1
    f.link[t2], f.link[h1] = h1, t2
    return f.to_diagram()
