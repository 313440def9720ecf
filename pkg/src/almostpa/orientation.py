"""Oriented 4-ended tangles and their boundary types.

Boundary directions fall into three classes (up to reversing everything):

* type I   - the two left ends point the same way (NW ~ SW),
* type II  - the two top ends point the same way (NW ~ NE),
* type III - diagonal ends point the same way (NW ~ SE); split into III+
  when ``|alpha/beta| >= 1`` and III- otherwise.

For a tangle whose crossings are all positive the sign of its fraction is
then forced (``lemma_sign_prediction``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .planar import Fragment, OrientationError
from .tangle import RationalTangle, Tangle, TangleFraction

PORTS = ("NW", "NE", "SW", "SE")


class TangleType(enum.Enum):
    I = "I"
    II = "II"
    III_PLUS = "III+"
    III_MINUS = "III-"


@dataclass(frozen=True)
class OrientedTangle:
    tangle: Tangle
    fragment: Fragment  # oriented copy of tangle.fragment
    boundary: tuple[tuple[str, str], ...]
    signs: tuple[int, ...]

    @property
    def directions(self) -> dict[str, str]:
        return dict(self.boundary)

    @property
    def all_positive(self) -> bool:
        return all(s > 0 for s in self.signs)

    @property
    def is_pa(self) -> bool:
        """Alternating with every crossing positive."""
        return self.all_positive and self.fragment.is_alternating()


def boundary_orientations():
    """All six assignments with two ends in and two out."""
    for ins in combinations(PORTS, 2):
        yield {p: ("in" if p in ins else "out") for p in PORTS}


def propagate(t: Tangle, boundary: dict[str, str]) -> OrientedTangle:
    if sorted(boundary) != sorted(PORTS):
        raise OrientationError("boundary must give NW, NE, SW, SE")
    if sum(v == "in" for v in boundary.values()) != 2:
        raise OrientationError("boundary needs exactly two in-ends")
    frag = t.fragment.orient(boundary)
    return OrientedTangle(t, frag, tuple(sorted(boundary.items())), tuple(frag.signs()))


def consistent_orientations(t: Tangle):
    for b in boundary_orientations():
        try:
            yield propagate(t, b)
        except OrientationError:
            continue


def boundary_class(directions: dict[str, str]) -> str:
    if directions["NW"] == directions["SW"]:
        return "I"
    if directions["NW"] == directions["NE"]:
        return "II"
    return "III"


def classify_type(ot: OrientedTangle, fraction: TangleFraction | None = None) -> TangleType:
    cls = boundary_class(ot.directions)
    if cls == "I":
        return TangleType.I
    if cls == "II":
        return TangleType.II
    if fraction is None:
        if not isinstance(ot.tangle, RationalTangle):
            raise ValueError("type III split needs the tangle's fraction")
        fraction = ot.tangle.fraction
    if fraction.is_infinite or abs(fraction.alpha) >= fraction.beta:
        return TangleType.III_PLUS
    return TangleType.III_MINUS


def lemma_sign_prediction(t: TangleType, f: TangleFraction) -> int:
    """Predicted sign of ``alpha/beta`` for an all-positive oriented tangle."""
    if f.is_infinite or f.alpha == 0:
        raise ValueError("prediction needs a finite non-zero fraction")
    if t is TangleType.I:
        return -1
    if t is TangleType.II:
        return 1
    return 1 if abs(f.alpha) >= f.beta else -1
