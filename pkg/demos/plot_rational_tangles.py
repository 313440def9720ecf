"""
Rational tangles and their orientations
=======================================

A Conway vector determines a fraction; the fraction determines the tangle
up to isotopy.  Every consistent orientation of the boundary gets a type,
and for all-positive orientations the type predicts the sign of the
fraction.
"""

from almostpa import canonical_vector, classify_type, consistent_orientations, fraction_of, tangle_diagram
from almostpa.tangle import TangleFraction

for cv in [(3,), (2, 1), (2, 3, 2), (-2, 0)]:
    print(cv, "->", fraction_of(cv))

###############################################################################
# Going back: each fraction has an alternating vector.

f = TangleFraction(16, 7)
print(f, "->", canonical_vector(f))

###############################################################################
# Orientations of [2,1].  Only the all-positive ones carry a prediction.

t = tangle_diagram((2, 1))
for ot in consistent_orientations(t):
    tag = "positive" if ot.all_positive else "mixed"
    print(dict(ot.boundary), classify_type(ot).value, ot.signs, tag)
