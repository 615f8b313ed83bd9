"""
Token jumping, token addition/removal, and conversions
======================================================

A TJ step swaps one token of the current target set for an outside vertex; a
k-TAR step adds or removes one token while no intermediate set ever exceeds
k+1 tokens.  The two models decide the same question, and the conversion
between them is constructive in both directions.
"""

from tsr import ReconfigSequence, Step, ThresholdGraph, tar_to_tj, tj_to_tar, validate_sequence
from tsr.reconfig import TAR, TJ

# The running instance: a ring with four demanding vertices (1, 3, 6, 7) and
# a separate two-vertex path (9, 10).
g = ThresholdGraph.build(
    10,
    [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (1, 8), (9, 10)],
    [2, 1, 2, 1, 1, 2, 2, 1, 1, 1],
)

x2 = frozenset({1, 6, 9, 10})
route = ReconfigSequence(
    x2,
    (Step.jump(9, 3), Step.jump(1, 7), Step.jump(6, 9)),
    TJ,
)
print("TJ route valid:", validate_sequence(g, route).ok)
print("visits:", [sorted(s) for s in route.sets()])

# Splitting every jump into add-then-remove yields a 4-TAR sequence whose
# peak size is 5 = k + 1.
as_tar = tj_to_tar(route)
print("\nas TAR steps:", [st.format() for st in as_tar.steps])
print("TAR valid:", validate_sequence(g, as_tar).ok)
print("peak size:", max(len(s) for s in as_tar.sets()))

# The reverse conversion cancels dip-and-recover pairs and swaps the rest
# into jumps; endpoints always survive the trip.
back = tar_to_tj(as_tar)
print("\nround trip:", [st.format() for st in back.steps])
print("endpoints preserved:", back.start == route.start and back.end == route.end)

# A detour below size k is rewritten away entirely.
s = frozenset({1, 6, 9})
dip = ReconfigSequence(s, (Step.remove(9), Step.add(9)), TAR, k=3)
print("\ndip-and-recover collapses to", len(tar_to_tj(dip)), "TJ steps")
