"""Command-line front end.

    almostpa classify   --montesinos "C(3/2,3/2,3/2)"
    almostpa build      --montesinos "C(2,inf,3)" --svg std.svg
    almostpa almost-pa  --montesinos "C(1/3,1/3,-1/2)" --json out.json
    almostpa untongue   --pd instance.json
    almostpa bracket    --pd '[]' --zero-components 1
    almostpa verify     --pd a.json --pd b.json

``--pd`` takes a file name or inline JSON.  Exit status: 0 success, 1 a
check came out false (or an internal invariant broke), 2 bad usage, bad
notation, an unmet precondition or an exceeded oracle bound.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .almost_alt import (
    DealternatorFrame,
    locate_frame,
    reduce_trivial,
    separate_and_untongue,
    trace_sequences,
    _frame_at,
)
from .bracket import BoundExceeded, DEFAULT_MAX_CROSSINGS, normalized_bracket
from .diagram import (
    Diagram,
    DiagramError,
    alternating_status,
    parse_pd,
    positivity_status,
    reducedness,
)
from .montesinos import (
    InvariantViolation,
    MontesinosSpec,
    PreconditionError,
    almost_pa,
    build_standard,
    check_marked,
    pa_to_almost_pa,
    positive_junctions,
    route_of,
)
from .orientation import classify_type, consistent_orientations
from .render import to_svg
from .tangle import parse_conway, tangle_diagram, numerator_closure

VERBS = ("classify", "build", "almost-pa", "untongue", "bracket", "verify")


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="almostpa", description="Positive and almost alternating diagrams.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("--montesinos", metavar="C(...)")
    p.add_argument("--conway", metavar="[...]")
    p.add_argument("--pd", action="append", default=[], metavar="FILE|JSON")
    p.add_argument("--zero-components", type=int, default=None)
    p.add_argument("--svg", metavar="OUT.svg")
    p.add_argument("--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS)
    p.add_argument("--json", metavar="OUT.json")
    return p


def _load(src: str) -> tuple[object, Diagram]:
    if os.path.exists(src):
        with open(src) as fh:
            src = fh.read()
    try:
        raw = json.loads(src)
    except json.JSONDecodeError as e:
        raise DiagramError(f"--pd is neither a file nor JSON: {e}") from None
    return raw, parse_pd(raw)


def _diagram_input(args) -> tuple[object, Diagram]:
    given = [x for x in (args.montesinos, args.conway) if x] + args.pd
    if len(given) != 1:
        raise UsageError("give exactly one of --montesinos, --conway, --pd")
    if args.montesinos:
        return None, build_standard(MontesinosSpec.parse(args.montesinos)).diagram
    if args.conway:
        return None, numerator_closure(tangle_diagram(parse_conway(args.conway)))
    raw, d = _load(args.pd[0])
    if args.zero_components is not None:
        d = Diagram(d.crossings, d.over_in, args.zero_components)
    return raw, d


def _pd_obj(d: Diagram) -> dict:
    out = {"pd": [list(t) for t in d.crossings]}
    if d.zero_components:
        out["zero_components"] = d.zero_components
    return out


def _diagram_report(d: Diagram) -> dict:
    alt = alternating_status(d)
    pos = positivity_status(d)
    red = reducedness(d)
    return {
        "crossings": d.n,
        "components": len(d.components) + d.zero_components,
        "writhe": d.writhe(),
        "alternating": alt.kind == "alternating",
        "alternating_status": alt.kind,
        "dealternators": list(alt.dealternators),
        "positive": pos.is_positive,
        "admits_positive_orientation": pos.admits_positive_orientation,
        "reduced": red.reduced,
        "ii_reduced": red.ii_reduced,
    }


def _classify(args) -> dict:
    if args.montesinos:
        spec = MontesinosSpec.parse(args.montesinos)
        std = build_standard(spec)
        rep = {"spec": str(spec), "conway": spec.conway_str(), **_diagram_report(std.diagram)}
        states = positive_junctions(spec)
        rep["route"] = route_of(spec) if std.positive else None
        if std.tangles is not None:
            rep["tangles"] = [
                {"fraction": str(f), "type": classify_type(ot, f).value}
                for f, ot in zip(spec.fractions, std.tangles)
            ]
            rep["junctions"] = ["".join(s) for s in states]
        return rep
    if args.conway:
        t = tangle_diagram(parse_conway(args.conway))
        return {
            "conway": args.conway,
            "fraction": str(t.fraction),
            "crossings": t.n,
            "alternating": t.fragment.is_alternating(),
            "orientations": [
                {
                    "boundary": dict(ot.boundary),
                    "type": classify_type(ot).value,
                    "signs": list(ot.signs),
                    "pa": ot.is_pa,
                }
                for ot in consistent_orientations(t)
            ],
        }
    return _diagram_report(_diagram_input(args)[1])


def _emit(args, payload, diagram: Diagram | None = None):
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=None)
    print(text)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(text + "\n")
    if args.svg and diagram is not None:
        with open(args.svg, "w") as fh:
            fh.write(to_svg(diagram))


def _untongue(raw, d: Diagram, bound: int) -> tuple[Diagram, str]:
    red = reducedness(d)
    if isinstance(raw, dict) and "frame" in raw:
        planted = _frame_at(d, int(raw["frame"]["d"]))
        if planted.to_dict() != raw["frame"]:
            raise PreconditionError("frame metadata does not match the diagram")
        f: DealternatorFrame = planted
    elif red.reduced and red.ii_reduced:
        f = locate_frame(d)
    else:
        return reduce_trivial(d, bound), "reduce_trivial"
    p, q = trace_sequences(d, f)
    return separate_and_untongue(d, f, p, q, bound), "separate_and_untongue"


def run(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.verb == "classify":
            rep = _classify(args)
            _emit(args, rep)
            return 0
        if args.verb == "build":
            _, d = _diagram_input(args)
            _emit(args, _pd_obj(d), d)
            return 0
        if args.verb == "almost-pa":
            if args.montesinos:
                spec = MontesinosSpec.parse(args.montesinos)
                m = almost_pa(spec, args.max_crossings)
                ref = build_standard(spec).diagram
            else:
                _, ref = _diagram_input(args)
                m = pa_to_almost_pa(ref)
            checks = check_marked(m, ref, args.max_crossings)
            _emit(args, {**m.to_dict(), "route": m.route, "checks": checks}, m.diagram)
            return 0 if all(checks.values()) else 1
        if args.verb == "untongue":
            raw, d = _diagram_input(args)
            out, how = _untongue(raw, d, args.max_crossings)
            poly = normalized_bracket(out, args.max_crossings)
            cert = {"method": how, "bracket": str(poly), "bracket_equal": poly == normalized_bracket(d, args.max_crossings)}
            _emit(args, {**_pd_obj(out), "certificate": cert}, out)
            return 0 if cert["bracket_equal"] else 1
        if args.verb == "bracket":
            _, d = _diagram_input(args)
            _emit(args, str(normalized_bracket(d, args.max_crossings)), d)
            return 0
        if args.verb == "verify":
            if len(args.pd) != 2 or args.montesinos or args.conway:
                raise UsageError("verify needs exactly two --pd inputs")
            (_, a), (_, b) = _load(args.pd[0]), _load(args.pd[1])
            pa, pb = normalized_bracket(a, args.max_crossings), normalized_bracket(b, args.max_crossings)
            same = pa == pb
            _emit(args, {"equal": same, "brackets": [str(pa), str(pb)]})
            return 0 if same else 1
    except (UsageError, DiagramError, PreconditionError, BoundExceeded, ValueError) as e:
        print(f"almostpa: {e}", file=sys.stderr)
        return 2
    except InvariantViolation as e:
        print(f"almostpa: invariant violated: {e}", file=sys.stderr)
        return 1
    return 2  # pragma: no cover


def main():
    sys.exit(run())
