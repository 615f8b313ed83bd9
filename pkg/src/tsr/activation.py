"""The threshold activation process and its certificates.

Activation is synchronous: at each step, every inactive vertex with at least
tau(v) active neighbors becomes active, all simultaneously.  The process is
irreversible and reaches a fixpoint after at most n rounds.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable

from .errors import NotAnOrientation, NotATargetSet, PreconditionViolated
from .graph import Edge, ThresholdGraph

SeedSet = frozenset[int]


def seed_mask(g: ThresholdGraph, seed: Iterable[int]) -> int:
    m = 0
    for v in seed:
        g.check_vertex(v)
        m |= 1 << v
    return m


def mask_to_set(mask: int) -> frozenset[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def closure_mask(g: ThresholdGraph, seed: int) -> int:
    """Fixpoint of the activation process, as a bitmask.

    Asynchronous propagation; reaches the same fixpoint as the synchronous
    rounds since activation is monotone.
    """
    adj = g.adj_masks
    tau = g.tau
    active = seed
    pending = [0] * (g.n + 1)
    frontier = []
    for v in range(1, g.n + 1):
        if not seed >> v & 1:
            pending[v] = tau[v] - (adj[v] & seed).bit_count()
            if pending[v] <= 0:
                active |= 1 << v
                frontier.append(v)
    while frontier:
        v = frontier.pop()
        for u in g.adj[v]:
            if not active >> u & 1:
                pending[u] -= 1
                if pending[u] == 0:
                    active |= 1 << u
                    frontier.append(u)
    return active


@dataclasses.dataclass(frozen=True)
class ActivationTrace:
    """Synchronous activation rounds A(0) <= A(1) <= ... up to the fixpoint.

    ``rounds[t]`` is the full active set after t rounds; ``activation_time[v]``
    is the round at which v became active, or None if it never does.
    """

    rounds: tuple[frozenset[int], ...]
    activation_time: dict[int, int | None]

    @property
    def final(self) -> frozenset[int]:
        return self.rounds[-1]

    def newly_active(self, t: int) -> frozenset[int]:
        if t == 0:
            return self.rounds[0]
        return self.rounds[t] - self.rounds[t - 1]

    def format(self) -> str:
        lines = []
        for t, r in enumerate(self.rounds):
            lines.append(f"round {t}: " + " ".join(str(v) for v in sorted(r)))
        return "\n".join(lines) + "\n"


def activate(g: ThresholdGraph, seed: Iterable[int]) -> ActivationTrace:
    """Run the synchronous activation process from ``seed`` to its fixpoint."""
    s = g.check_seed(seed)
    adj = g.adj_masks
    tau = g.tau
    active = seed_mask(g, s)
    rounds = [active]
    time: dict[int, int | None] = {v: None for v in g.vertices}
    for v in s:
        time[v] = 0
    t = 0
    while True:
        new = 0
        for v in range(1, g.n + 1):
            if not active >> v & 1 and (adj[v] & active).bit_count() >= tau[v]:
                new |= 1 << v
        if not new:
            break
        t += 1
        active |= new
        rounds.append(active)
        for v in mask_to_set(new):
            time[v] = t
    return ActivationTrace(
        rounds=tuple(mask_to_set(r) for r in rounds),
        activation_time=time,
    )


def is_target_set(g: ThresholdGraph, seed: Iterable[int]) -> bool:
    """True iff activating ``seed`` eventually activates every vertex."""
    s = seed_mask(g, g.check_seed(seed))
    return closure_mask(g, s) == g.full_mask


@dataclasses.dataclass(frozen=True)
class Residual:
    """Graph induced on the vertices a seed fails to activate.

    Residual ids are dense 1-based; ``vertex_map[i]`` is the original id of
    residual vertex i (index 0 unused).  Thresholds are reduced by the number
    of already-active neighbors.
    """

    graph: ThresholdGraph
    vertex_map: tuple[int, ...]

    @property
    def is_empty(self) -> bool:
        return self.graph.n == 0

    def original_vertices(self) -> frozenset[int]:
        return frozenset(self.vertex_map[1:])

    def as_original(self) -> tuple[frozenset[int], frozenset[Edge], dict[int, int]]:
        """(vertices, edges, thresholds) relabeled back to original ids."""
        vm = self.vertex_map
        verts = frozenset(vm[1:])
        edges = frozenset(
            (min(vm[u], vm[v]), max(vm[u], vm[v])) for u, v in self.graph.edges
        )
        tau = {vm[v]: self.graph.tau[v] for v in self.graph.vertices}
        return verts, edges, tau


def residual(g: ThresholdGraph, seed: Iterable[int]) -> Residual:
    """Residual graph G_S: vertices not activated by S, thresholds reduced."""
    s = g.check_seed(seed)
    active = closure_mask(g, seed_mask(g, s))
    survivors = [v for v in g.vertices if not active >> v & 1]
    index = {v: i + 1 for i, v in enumerate(survivors)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges
        if u in index and v in index
    ]
    tau = [
        g.tau[v] - (g.adj_masks[v] & active).bit_count()
        for v in survivors
    ]
    sub = ThresholdGraph.build(len(survivors), edges, tau)
    return Residual(graph=sub, vertex_map=(0,) + tuple(survivors))


@dataclasses.dataclass(frozen=True)
class Orientation:
    """An assignment of a direction u -> v to every edge of a graph."""

    arcs: tuple[Edge, ...]

    def in_degrees(self, g: ThresholdGraph) -> list[int]:
        indeg = [0] * (g.n + 1)
        for _, v in self.arcs:
            indeg[v] += 1
        return indeg

    def format(self) -> str:
        return "\n".join(f"a {u} {v}" for u, v in self.arcs) + "\n"


def parse_orientation(text: str) -> Orientation:
    """Parse an orientation file: one ``a <u> <v>`` line per directed edge."""
    from .errors import MalformedLine

    arcs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] != "a" or len(parts) != 3:
            raise MalformedLine(f"line {lineno}: expected 'a <u> <v>'")
        try:
            arcs.append((int(parts[1]), int(parts[2])))
        except ValueError as exc:
            raise MalformedLine(f"line {lineno}: {exc}") from exc
    return Orientation(arcs=tuple(arcs))


def _is_acyclic(n: int, arcs: Iterable[Edge]) -> bool:
    out: list[list[int]] = [[] for _ in range(n + 1)]
    indeg = [0] * (n + 1)
    for u, v in arcs:
        out[u].append(v)
        indeg[v] += 1
    queue = [v for v in range(1, n + 1) if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for u in out[v]:
            indeg[u] -= 1
            if indeg[u] == 0:
                queue.append(u)
    return seen == n


def certify_orientation(g: ThresholdGraph, seed: Iterable[int], d: Orientation) -> bool:
    """Check the acyclic-orientation certificate for ``seed`` being a target set.

    Accepts iff d orients every edge of g exactly once, is acyclic, and every
    vertex outside the seed has in-degree at least its threshold.
    """
    s = g.check_seed(seed)
    covered = set()
    for u, v in d.arcs:
        g.check_vertex(u)
        g.check_vertex(v)
        if not g.has_edge(u, v):
            raise NotAnOrientation(f"arc ({u},{v}) is not an edge of the graph")
        e = (min(u, v), max(u, v))
        if e in covered:
            raise NotAnOrientation(f"edge {e} oriented twice")
        covered.add(e)
    if len(covered) != g.m:
        raise NotAnOrientation(f"{g.m - len(covered)} edges left unoriented")
    if not _is_acyclic(g.n, d.arcs):
        return False
    indeg = d.in_degrees(g)
    return all(indeg[v] >= g.tau[v] for v in g.vertices if v not in s)


def orientation_from_trace(g: ThresholdGraph, seed: Iterable[int]) -> Orientation:
    """Build a passing certificate from activation times of a target set.

    Edges point from earlier-activated to later-activated endpoints; ties are
    broken toward the larger id, so arcs increase in (time, id) and the result
    is acyclic.
    """
    s = g.check_seed(seed)
    trace = activate(g, s)
    if trace.final != frozenset(g.vertices):
        raise NotATargetSet(f"{sorted(s)} is not a target set")
    t = trace.activation_time
    arcs = []
    for u, v in g.edges:
        if (t[u], u) < (t[v], v):
            arcs.append((u, v))
        else:
            arcs.append((v, u))
    return Orientation(arcs=tuple(arcs))


def shrink_threshold1_seed(
    g: ThresholdGraph, seed: Iterable[int], v: int, w: int
) -> frozenset[int]:
    """Replace a threshold-1 seed vertex v by any neighbor w.

    The result S \\ {v} u {w} is again a target set whenever S was one.
    """
    s = g.check_seed(seed)
    g.check_vertex(v)
    g.check_vertex(w)
    if v not in s:
        raise PreconditionViolated(f"vertex {v} is not in the seed set")
    if g.tau[v] != 1:
        raise PreconditionViolated(f"vertex {v} has threshold {g.tau[v]} != 1")
    if w not in g.adj[v]:
        raise PreconditionViolated(f"vertex {w} is not a neighbor of {v}")
    if not is_target_set(g, s):
        raise PreconditionViolated(f"{sorted(s)} is not a target set")
    out = (s - {v}) | {w}
    assert is_target_set(g, out)
    return out
