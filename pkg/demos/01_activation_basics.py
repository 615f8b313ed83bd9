"""
Threshold activation from the ground up
=======================================

A threshold graph pairs every vertex v with an integer tau(v) between 1 and
its degree.  Seeding a set of vertices starts a synchronous cascade: a vertex
wakes up once tau(v) of its neighbors are awake, and never goes back to
sleep.  A seed whose cascade reaches everyone is a target set.
"""

from tsr import (
    ThresholdGraph,
    activate,
    certify_orientation,
    is_target_set,
    orientation_from_trace,
    residual,
)

# A 6-cycle where alternating vertices need two active neighbors.
g = ThresholdGraph.build(
    6,
    [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)],
    [2, 1, 2, 1, 2, 1],
)

# Seeding two of the three demanding vertices is enough: the threshold-1
# vertices between them relay the cascade around the ring.
trace = activate(g, {1, 3})
print(trace.format())
print("is {1,3} a target set?", is_target_set(g, {1, 3}))
print("is {2,4} a target set?", is_target_set(g, {2, 4}))

# The residual shows what a failed seed leaves behind: the untouched part of
# the graph with thresholds discounted by already-active neighbors.
left = residual(g, {2})
verts, edges, tau = left.as_original()
print("\nresidual of {2}: vertices", sorted(verts), "thresholds", tau)

# Every target set has a succinct certificate: an acyclic orientation in
# which each non-seed vertex receives at least tau(v) arcs.  The activation
# times of a cascade produce one directly.
cert = orientation_from_trace(g, {1, 3})
print("\norientation certificate:")
print(cert.format())
print("certificate accepted:", certify_orientation(g, {1, 3}, cert))
