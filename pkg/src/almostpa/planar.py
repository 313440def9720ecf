"""Planar maps of 4-valent crossings with optional boundary ports.

A :class:`Fragment` is the working representation used to build and rewire
diagrams.  Crossing ``i`` has four slots ``(i, 0) .. (i, 3)`` in
counterclockwise order; slots 0 and 2 carry the under-strand, 1 and 3 the
over-strand.  Boundary endpoints of a tangle are ports named by strings
(``"NW"``, ``"NE"``, ``"SW"``, ``"SE"``).  ``link`` pairs every slot/port
with the other end of its edge.

Orientation is optional: ``heads`` is the set of slots/ports at which an edge
*ends*.  A port in ``heads`` is therefore a place where a strand leaves the
fragment.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping

Slot = Hashable  # (crossing, position) tuple or a port name


class OrientationError(ValueError):
    """Strand directions cannot be made consistent."""


def _opp(s):
    i, k = s
    return (i, (k + 2) % 4)


def _is_port(s) -> bool:
    return isinstance(s, str)


class Fragment:
    """Mutable-by-copy planar map; every operation returns a new fragment."""

    __slots__ = ("n", "link", "heads", "loops")

    def __init__(self, n: int, link: Mapping, heads: Iterable | None = None, loops: int = 0):
        self.n = n
        self.link = dict(link)
        self.heads = None if heads is None else set(heads)
        self.loops = loops

    # -- constructors -------------------------------------------------
    @classmethod
    def crossing(cls, twist: int = 1) -> "Fragment":
        """The one-crossing tangle ``[+1]`` or ``[-1]``.

        ``[+1]`` has its over-strand on the NW-SE diagonal, ``[-1]`` on SW-NE.
        """
        if twist == 1:
            order = ("NE", "NW", "SW", "SE")
        elif twist == -1:
            order = ("NW", "SW", "SE", "NE")
        else:
            raise ValueError("twist must be +1 or -1")
        link = {}
        for k, p in enumerate(order):
            link[(0, k)] = p
            link[p] = (0, k)
        return cls(1, link)

    @classmethod
    def zero(cls) -> "Fragment":
        return cls(0, {"NW": "NE", "NE": "NW", "SW": "SE", "SE": "SW"})

    @classmethod
    def infinity(cls) -> "Fragment":
        return cls(0, {"NW": "SW", "SW": "NW", "NE": "SE", "SE": "NE"})

    def copy(self) -> "Fragment":
        return Fragment(self.n, self.link, self.heads, self.loops)

    # -- structure ----------------------------------------------------
    @property
    def ports(self) -> list[str]:
        return sorted(s for s in self.link if _is_port(s))

    def is_closed(self) -> bool:
        return not self.ports

    def partner(self, s):
        return self.link[s]

    def shifted(self, offset: int, rename: Mapping[str, str] | None = None) -> "Fragment":
        rename = rename or {}

        def f(s):
            if _is_port(s):
                return rename.get(s, s)
            return (s[0] + offset, s[1])

        link = {f(a): f(b) for a, b in self.link.items()}
        heads = None if self.heads is None else {f(h) for h in self.heads}
        return Fragment(self.n, link, heads, self.loops)

    def rename_ports(self, rename: Mapping[str, str]) -> "Fragment":
        return self.shifted(0, rename)

    @staticmethod
    def disjoint(a: "Fragment", b: "Fragment", rename_a=None, rename_b=None) -> "Fragment":
        fa = a.shifted(0, rename_a)
        fb = b.shifted(a.n, rename_b)
        clash = set(p for p in fa.link if _is_port(p)) & set(p for p in fb.link if _is_port(p))
        if clash:
            raise ValueError(f"port name clash {sorted(clash)}")
        link = dict(fa.link)
        link.update(fb.link)
        if (fa.heads is None) != (fb.heads is None):
            heads = None
        else:
            heads = None if fa.heads is None else fa.heads | fb.heads
        return Fragment(a.n + b.n, link, heads, a.loops + b.loops)

    def join(self, p: str, q: str) -> "Fragment":
        """Connect port ``p`` to port ``q`` and drop both ports."""
        out = self.copy()
        x, y = out.link.pop(p), out.link.pop(q)
        if out.heads is not None:
            if (p in out.heads) == (q in out.heads):
                raise OrientationError(f"ports {p} and {q} have the same direction")
            out.heads.discard(p)
            out.heads.discard(q)
        if x == q:
            out.loops += 1
            return out
        out.link[x] = y
        out.link[y] = x
        return out

    # -- tangle algebra -----------------------------------------------
    @staticmethod
    def tangle_sum(a: "Fragment", b: "Fragment") -> "Fragment":
        """Horizontal sum: ``a`` on the left, ``b`` on the right."""
        f = Fragment.disjoint(a, b, {"NE": "_a1", "SE": "_a2"}, {"NW": "_b1", "SW": "_b2"})
        return f.join("_a1", "_b1").join("_a2", "_b2")

    @staticmethod
    def tangle_product(a: "Fragment", b: "Fragment") -> "Fragment":
        """Vertical stacking: ``a`` on top, ``b`` below."""
        f = Fragment.disjoint(a, b, {"SW": "_a1", "SE": "_a2"}, {"NW": "_b1", "NE": "_b2"})
        return f.join("_a1", "_b1").join("_a2", "_b2")

    def numerator(self) -> "Fragment":
        return self.join("NW", "NE").join("SW", "SE")

    def denominator(self) -> "Fragment":
        return self.join("NW", "SW").join("NE", "SE")

    def rotate_pi(self) -> "Fragment":
        return self.rename_ports({"NW": "SE", "SE": "NW", "NE": "SW", "SW": "NE"})

    def change(self, i: int) -> "Fragment":
        """Swap over and under at crossing ``i`` (slot positions shift by one)."""

        def f(s):
            if not _is_port(s) and s[0] == i:
                return (i, (s[1] + 1) % 4)
            return s

        link = {f(a): f(b) for a, b in self.link.items()}
        heads = None if self.heads is None else {f(h) for h in self.heads}
        return Fragment(self.n, link, heads, self.loops)

    def mirror(self) -> "Fragment":
        out = self
        for i in range(self.n):
            out = out.change(i)
        return out

    # -- orientation --------------------------------------------------
    def _walk(self, start):
        """Slots visited leaving ``start`` (a tail) until a port or ``start``."""
        seq = []
        s = start
        while True:
            t = self.link[s]
            seq.append((s, t))
            if _is_port(t):
                return seq, t
            s = _opp(t)
            if s == start:
                return seq, None

    def orient(self, port_dirs: Mapping[str, str]) -> "Fragment":
        """Orient every strand given ``{"NW": "in", ...}`` for all ports."""
        ports = self.ports
        if set(port_dirs) != set(ports):
            raise OrientationError(f"need directions for ports {ports}")
        if sum(1 for p in ports if port_dirs[p] == "in") * 2 != len(ports):
            raise OrientationError("boundary must have as many in-ports as out-ports")
        heads = set()
        for p in ports:
            if port_dirs[p] != "in":
                continue
            seq, end = self._walk(p)
            if end is None or port_dirs[end] != "out":
                raise OrientationError(f"strand entering at {p} leaves at an in-port {end}")
            for _, t in seq:
                heads.add(t)
        out = Fragment(self.n, self.link, heads, self.loops)
        return out._orient_closed_strands()

    def _orient_closed_strands(self) -> "Fragment":
        heads = set(self.heads or ())
        for i in range(self.n):
            for k in range(4):
                s = (i, k)
                if s in heads or self.link[s] in heads:
                    continue
                seq, end = self._walk(s)
                for _, t in seq:
                    heads.add(t)
        return Fragment(self.n, self.link, heads, self.loops)

    def port_directions(self) -> dict[str, str]:
        if self.heads is None:
            raise OrientationError("fragment is not oriented")
        return {p: ("out" if p in self.heads else "in") for p in self.ports}

    def signs(self) -> list[int]:
        """Crossing signs: ``+1`` iff the over-strand enters one slot after
        the incoming under-strand (counterclockwise)."""
        if self.heads is None:
            raise OrientationError("fragment is not oriented")
        out = []
        for i in range(self.n):
            u = 0 if (i, 0) in self.heads else 2
            o = 1 if (i, 1) in self.heads else 3
            out.append(1 if o == (u + 1) % 4 else -1)
        return out

    def is_alternating(self) -> bool:
        """Every edge between two crossings joins an over slot to an under slot."""
        for a, b in self.link.items():
            if _is_port(a) or _is_port(b):
                continue
            if a[1] % 2 == b[1] % 2:
                return False
        return True

    def boundary_pattern(self) -> dict[str, str]:
        """``o``/``u`` for the first crossing met from each port."""
        out = {}
        for p in self.ports:
            t = self.link[p]
            if _is_port(t):
                out[p] = "-"
            else:
                out[p] = "o" if t[1] % 2 else "u"
        return out

    # -- conversion ---------------------------------------------------
    def to_diagram(self):
        from .diagram import Diagram

        if not self.is_closed():
            raise ValueError("fragment has open ports")
        f = self if self.heads is not None else Fragment(self.n, self.link, set(), self.loops)
        f = f._orient_closed_strands()
        label: dict = {}
        nxt = 1
        for i in range(f.n):
            for k in range(4):
                s = (i, k)
                if s in f.heads or s in label:
                    continue
                seq, _ = f._walk(s)
                for a, b in seq:
                    label[a] = label[b] = nxt
                    nxt += 1
        crossings, over_in = [], []
        for i in range(f.n):
            r = 0 if (i, 0) in f.heads else 2
            crossings.append(tuple(label[(i, (r + j) % 4)] for j in range(4)))
            over_in.append((i, (r + 1) % 4) in f.heads)
        return Diagram(tuple(crossings), tuple(over_in), f.loops)

    def slot_map(self) -> dict:
        """Fragment slot -> position in the tuple written by ``to_diagram``."""
        f = self if self.heads is not None else Fragment(self.n, self.link, set(), self.loops)
        f = f._orient_closed_strands()
        out = {}
        for i in range(f.n):
            r = 0 if (i, 0) in f.heads else 2
            for k in range(4):
                out[(i, k)] = (i, (k - r) % 4)
        return out

    @classmethod
    def from_diagram(cls, d) -> "Fragment":
        where: dict[int, list] = {}
        for i, t in enumerate(d.crossings):
            for k, lab in enumerate(t):
                where.setdefault(lab, []).append((i, k))
        link = {}
        for lab, (a, b) in where.items():
            link[a] = b
            link[b] = a
        heads = set()
        for i, flag in enumerate(d.over_in):
            heads.add((i, 0))
            heads.add((i, 1) if flag else (i, 3))
        return cls(len(d.crossings), link, heads, d.zero_components)
