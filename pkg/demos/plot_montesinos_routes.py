"""
Almost PA diagrams for Montesinos links
=======================================

Three ways to reach a diagram that is one crossing change away from being
positive and alternating, depending on the fractions in the spec.
"""

from almostpa import MontesinosSpec, almost_pa, build_standard, check_marked, route_of

specs = ["C(2,inf,3)", "C(3/2,3/2,3/2)", "C(1/3,1/3,-1/2)"]

for text in specs:
    spec = MontesinosSpec.parse(text)
    std = build_standard(spec)
    m = almost_pa(spec)
    checks = check_marked(m, std.diagram)
    print(f"{text:18} route {route_of(spec)}  {std.diagram.n:2d} -> {m.diagram.n:2d} crossings, d={m.d}")
    print("    ", checks)

# the marked diagram as JSON, ready for the command line tool
print(almost_pa(MontesinosSpec.parse(specs[-1])).to_json())
