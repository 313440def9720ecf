"""
Brackets of small diagrams
==========================

PD codes in, Laurent polynomials out.
"""

from almostpa import kauffman_bracket, normalized_bracket, parse_pd

# the right-hand trefoil, read counterclockwise from the incoming under-strand
trefoil = parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]")
print("signs:", trefoil.signs(), "writhe:", trefoil.writhe())
print("<D>      =", kauffman_bracket(trefoil))
print("normalized =", normalized_bracket(trefoil))

# a kink changes the raw bracket by -A^3 but not the normalized one
kink = parse_pd([[1, 2, 2, 1]])
print(kauffman_bracket(kink), "|", normalized_bracket(kink))

# mirror images swap A and A^-1
print(normalized_bracket(trefoil.mirror()))

# the figure-eight is its own mirror image
fig8 = parse_pd("[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]")
print(normalized_bracket(fig8) == normalized_bracket(fig8).mirror())
