"""SVG pictures of diagrams (render only; nothing here feeds back into data).

Every edge is subdivided twice so the crossing graph becomes simple, the
rotation system of the diagram is handed to networkx as a planar embedding,
and its straight-line grid drawing supplies coordinates.  Under-passes are
drawn with a gap next to the crossing.
"""

from __future__ import annotations

import math

import networkx as nx

from .diagram import Diagram

SCALE = 40.0
GAP = 0.35  # fraction of the first segment left blank at an under-pass


def _embedding(d: Diagram) -> nx.PlanarEmbedding:
    emb = nx.PlanarEmbedding()
    nbr: dict[tuple[int, int], tuple] = {}
    for lab, (tail, head) in d._ends.items():
        a, b = ("e", lab, 0), ("e", lab, 1)
        nbr[tail], nbr[head] = a, b
        emb.add_half_edge_first(a, ("x", tail[0]))
        emb.add_half_edge_ccw(a, b, ("x", tail[0]))
        emb.add_half_edge_first(b, ("x", head[0]))
        emb.add_half_edge_ccw(b, a, ("x", head[0]))
    for i in range(d.n):
        v = ("x", i)
        prev = None
        for k in range(4):
            w = nbr[(i, k)]
            if prev is None:
                emb.add_half_edge_first(v, w)
            else:
                emb.add_half_edge_ccw(v, w, prev)
            prev = w
    return emb


def _layout(d: Diagram) -> tuple[dict, dict]:
    emb = _embedding(d)
    emb.check_structure()
    pos = nx.combinatorial_embedding_to_pos(emb)
    # networkx may hand back the mirror picture; fix the handedness so the
    # slots of crossing 0 run counterclockwise on screen (y grows downwards)
    nbr = {}
    for lab, (tail, head) in d._ends.items():
        nbr[tail], nbr[head] = ("e", lab, 0), ("e", lab, 1)
    cx, cy = pos[("x", 0)]
    ang = [math.atan2(pos[nbr[(0, k)]][1] - cy, pos[nbr[(0, k)]][0] - cx) for k in range(4)]
    turns = sum((ang[(k + 1) % 4] - ang[k]) % (2 * math.pi) for k in range(4))
    # increasing screen angle is clockwise to the eye when y grows downwards
    flip = turns < 3 * math.pi
    pos = {v: (x, -y if flip else y) for v, (x, y) in pos.items()}
    return pos, nbr


def _path(points) -> str:
    (x0, y0), *rest = points
    return f"M {x0:.1f} {y0:.1f} " + " ".join(f"L {x:.1f} {y:.1f}" for x, y in rest)


def to_svg(d: Diagram, title: str = "") -> str:
    parts = []
    width = height = 0.0
    if d.n:
        pos, nbr = _layout(d)
        xs = [p[0] for p in pos.values()]
        ys = [p[1] for p in pos.values()]
        ox, oy = min(xs) - 1, min(ys) - 1
        pt = {v: ((x - ox) * SCALE, (y - oy) * SCALE) for v, (x, y) in pos.items()}
        width = (max(xs) - ox + 1) * SCALE
        height = (max(ys) - oy + 1) * SCALE
        for lab, (tail, head) in d._ends.items():
            a, b = pt[nbr[tail]], pt[nbr[head]]
            p = pt[("x", tail[0])]
            q = pt[("x", head[0])]
            if tail[1] % 2 == 0:  # under-pass at the tail
                p = (p[0] + GAP * (a[0] - p[0]), p[1] + GAP * (a[1] - p[1]))
            if head[1] % 2 == 0:
                q = (q[0] + GAP * (b[0] - q[0]), q[1] + GAP * (b[1] - q[1]))
            parts.append(f'<path d="{_path([p, a, b, q])}" class="strand"/>')
            mx, my = (a[0] + b[0]) / 2, (a[1] + b[1]) / 2
            parts.append(f'<text x="{mx:.1f}" y="{my - 4:.1f}" class="label">{lab}</text>')
        for i in range(d.n):
            x, y = pt[("x", i)]
            parts.append(f'<text x="{x + 6:.1f}" y="{y + 14:.1f}" class="idx">{i}</text>')
    for k in range(d.zero_components):
        r = SCALE / 2
        cx = width + r + 10 + k * (2 * r + 10)
        parts.append(f'<circle cx="{cx:.1f}" cy="{r + 10:.1f}" r="{r:.1f}" class="strand"/>')
    width += d.zero_components * (SCALE + 10) + 10
    height = max(height, SCALE + 20)
    style = (
        "<style>.strand{fill:none;stroke:#222;stroke-width:3}"
        ".label{font:9px sans-serif;fill:#888}.idx{font:11px sans-serif;fill:#b22}</style>"
    )
    head = f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}">'
    t = f"<title>{title}</title>" if title else ""
    return "\n".join([head, t, style, *parts, "</svg>"]) + "\n"
