"""
Charts, transitions, gauge identities
=====================================

Covers a complex with overlapping charts, computes the translation
relating any two charts on their overlap, and checks the gauge
identities: the self-transition is the identity, swapping charts negates
the translation, and transitions compose along chart triples. Honest
sections satisfy all three by arithmetic; the verifier earns its keep on
tampered data.
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from descell import (
    TransitionFunction,
    assign_probe,
    from_simplices,
    make_chart,
    transition,
    verify_cocycle,
    with_overrides,
)

# ----------------------------------------------------------------------
# A little triangle complex with a 2-component descriptor per cell.

k = from_simplices([("A", "B", "C")])
probe = assign_probe(k, [(cid, (i / 8, 1.0)) for i, cid in enumerate(sorted(k.cells))])

shared = {"A", "B", "A-B"}
c1 = make_chart(probe, shared | {"C"}, "c1")
c2 = make_chart(probe, shared | {"A-C"}, "c2")
c3 = make_chart(probe, shared | {"B-C"}, "c3")

t12 = transition(c1, c2)
print("t(c1,c2) on the overlap:", dict(t12.values))
print("all charts restrict one probe, so the report is clean:")
print(verify_cocycle([c1, c2, c3], tolerance=0.0, probe=probe).to_text())

# ----------------------------------------------------------------------
# Tamper with one transition value. The composition identity now fails
# at that cell, and the verifier pinpoints it.

values = dict(t12.values)
values["A"] = (values["A"][0] + 0.5, values["A"][1])
tampered = {("c1", "c2"): TransitionFunction(("c1", "c2"), values)}
report = verify_cocycle([c1, c2, c3], transitions=tampered)
print("after tampering with t(c1,c2) at cell A:")
print(report.to_text())

# ----------------------------------------------------------------------
# A chart whose section disagrees with the governing probe is a broken
# local view; supplying the probe flags it under its own identity.

crooked = with_overrides(c2, {"B": (9.0, 9.0)})
report_verify = verify_cocycle([c1, crooked, c3], probe=probe)
print("after overriding c2's section at cell B:")
for v in report_verify.by_identity("trivialization"):
    print(" ", v)
