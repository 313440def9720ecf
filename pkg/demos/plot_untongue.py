"""
Untonguing a positive almost alternating diagram
================================================

Two PA-tangles ([2] and [3,1]) are joined through a single dealternator ``d``.  Walking
the two arcs out of the frame around ``d`` and turning one side over gives
an alternating diagram of the same link.
"""

import os
import tempfile

from almostpa import (
    alternating_status,
    build_test_instance,
    normalized_bracket,
    separate_and_untongue,
    tangle_diagram,
    to_svg,
    trace_sequences,
)

inst = build_test_instance(tangle_diagram((2,)), tangle_diagram((3, 1)))
d, frame = inst.diagram, inst.frame
print(alternating_status(d), "signs", d.signs())
print(frame)

p, q = trace_sequences(d, frame)
print("p:", p.crossings, " q:", q.crossings)

out = separate_and_untongue(d, frame, p, q)
print(alternating_status(out).kind, out.n, "crossings")
print(normalized_bracket(out) == normalized_bracket(d))

# pictures of both, for eyeballing
where = tempfile.mkdtemp()
for name, g in (("before", d), ("after", out)):
    path = os.path.join(where, name + ".svg")
    with open(path, "w") as fh:
        fh.write(to_svg(g, name))
    print("wrote", path)
