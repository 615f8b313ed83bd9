"""Exhaustive ground truth for small instances.

Enumerates target sets, walks the token-jumping reconfiguration graph by
breadth-first search, and reconstructs shortest sequences.  Everything here
is desk-scale: state exploration aborts once it exceeds a configurable guard.
"""

from __future__ import annotations

import dataclasses
import itertools
from collections import deque
from math import comb

import numpy as np

from .activation import closure_mask, mask_to_set
from .errors import InstanceTooLarge, NotATargetSet, SizeMismatch
from .graph import ThresholdGraph
from .reconfig import TAR, TJ, ReconfigSequence, Step

DEFAULT_GUARD = 5_000_000
DEFAULT_CAP = 20


@dataclasses.dataclass(frozen=True)
class OracleReport:
    """Result of an exhaustive query.

    ``num_target_sets`` and ``components`` are filled only by full-enumeration
    queries; pair queries explore lazily and leave them None.
    """

    k: int
    num_target_sets: int | None = None
    components: tuple[tuple[frozenset[int], ...], ...] | None = None
    reconfigurable: bool | None = None
    shortest: ReconfigSequence | None = None
    explored: int = 0


def _mask_of(seed) -> int:
    m = 0
    for v in seed:
        m |= 1 << v
    return m


def _ts_test(g: ThresholdGraph):
    full = g.full_mask
    memo: dict[int, bool] = {}

    def is_ts(mask: int) -> bool:
        hit = memo.get(mask)
        if hit is None:
            hit = closure_mask(g, mask) == full
            memo[mask] = hit
        return hit

    return is_ts


def enumerate_target_sets(
    g: ThresholdGraph,
    k: int,
    *,
    guard: int = DEFAULT_GUARD,
    cap: int = DEFAULT_CAP,
) -> list[frozenset[int]]:
    """All size-k target sets in lexicographic order of their sorted id lists."""
    if not 0 <= k <= g.n:
        raise SizeMismatch(f"k={k} not in 0..{g.n}")
    if g.n > cap:
        raise InstanceTooLarge(f"n={g.n} exceeds the enumeration cap of {cap}")
    if comb(g.n, k) > guard:
        raise InstanceTooLarge(f"C({g.n},{k}) exceeds the enumeration guard")
    is_ts = _ts_test(g)
    out = []
    for combo in itertools.combinations(g.vertices, k):
        if is_ts(_mask_of(combo)):
            out.append(frozenset(combo))
    return out


def min_target_set_size(
    g: ThresholdGraph, *, guard: int = DEFAULT_GUARD, cap: int = DEFAULT_CAP
) -> int:
    """Smallest k for which a size-k target set exists."""
    if g.n == 0:
        return 0
    for k in range(0, g.n + 1):
        if enumerate_target_sets(g, k, guard=guard, cap=cap):
            return k
    raise AssertionError("V itself is always a target set")


def all_target_set_masks(g: ThresholdGraph, *, guard: int = DEFAULT_GUARD) -> list[int]:
    """Bitmasks of every target set of g, by batch closure over all 2^n seeds."""
    n = g.n
    if n == 0:
        return [0]
    if (1 << n) > guard:
        raise InstanceTooLarge(f"2^{n} exceeds the enumeration guard")
    masks = np.arange(1 << n, dtype=np.uint32)
    active = ((masks[:, None] >> np.arange(n, dtype=np.uint32)) & 1).astype(bool)
    adj = np.zeros((n, n), dtype=np.int16)
    for u, v in g.edges:
        adj[u - 1, v - 1] = adj[v - 1, u - 1] = 1
    tau = np.array([g.tau[v] for v in g.vertices], dtype=np.int16)
    while True:
        counts = active.astype(np.int16) @ adj
        new = (counts >= tau) & ~active
        if not new.any():
            break
        active |= new
    full = active.all(axis=1)
    # package masks use bit v for vertex v, so shift the dense mask up by one
    return [int(m) << 1 for m in np.flatnonzero(full)]


def target_sets_by_size(
    g: ThresholdGraph, *, guard: int = DEFAULT_GUARD
) -> dict[int, list[int]]:
    """Target-set masks grouped by size, each list sorted by mask value."""
    by_size: dict[int, list[int]] = {}
    for m in all_target_set_masks(g, guard=guard):
        by_size.setdefault(m.bit_count(), []).append(m)
    for masks in by_size.values():
        masks.sort()
    return by_size


def _check_pair(g: ThresholdGraph, x, y) -> tuple[frozenset[int], frozenset[int]]:
    xs, ys = g.check_seed(x), g.check_seed(y)
    is_ts = _ts_test(g)
    for s in (xs, ys):
        if not is_ts(_mask_of(s)):
            raise NotATargetSet(f"{sorted(s)} is not a target set")
    return xs, ys


def tj_decide(
    g: ThresholdGraph,
    x,
    y,
    *,
    guard: int = DEFAULT_GUARD,
) -> OracleReport:
    """BFS over size-k target sets under single jumps; shortest sequence if connected.

    Explores only the component of x, so the guard bounds visited states, not
    the full C(n,k) space.  Neighbor order is lexicographic (ascending removed
    vertex, then ascending added vertex) for reproducible shortest sequences.
    """
    xs, ys = _check_pair(g, x, y)
    if len(xs) != len(ys):
        raise SizeMismatch(f"|x|={len(xs)} != |y|={len(ys)}")
    k = len(xs)
    is_ts = _ts_test(g)
    start, goal = _mask_of(xs), _mask_of(ys)
    parents: dict[int, tuple[int, int, int] | None] = {start: None}
    queue = deque([start])
    explored = 0
    found = start == goal
    while queue and not found:
        cur = queue.popleft()
        explored += 1
        if explored > guard:
            raise InstanceTooLarge(f"BFS exceeded guard of {guard} states")
        cur_set = sorted(mask_to_set(cur))
        for out in cur_set:
            base = cur & ~(1 << out)
            for into in g.vertices:
                if cur >> into & 1:
                    continue
                nxt = base | (1 << into)
                if nxt in parents or not is_ts(nxt):
                    continue
                parents[nxt] = (cur, out, into)
                if nxt == goal:
                    found = True
                    break
                queue.append(nxt)
            if found:
                break
    if not found:
        return OracleReport(k=k, reconfigurable=False, explored=len(parents))
    steps: list[Step] = []
    node = goal
    while parents[node] is not None:
        prev, out, into = parents[node]
        steps.append(Step.jump(out, into))
        node = prev
    seq = ReconfigSequence(xs, tuple(reversed(steps)), TJ)
    return OracleReport(k=k, reconfigurable=True, shortest=seq, explored=len(parents))


def ktar_decide(
    g: ThresholdGraph,
    x,
    y,
    k: int,
    *,
    guard: int = DEFAULT_GUARD,
) -> OracleReport:
    """BFS over target sets of size at most k+1 under single additions/removals."""
    xs, ys = _check_pair(g, x, y)
    if len(xs) > k or len(ys) > k:
        raise SizeMismatch(f"endpoint sizes {len(xs)}, {len(ys)} exceed k={k}")
    is_ts = _ts_test(g)
    start, goal = _mask_of(xs), _mask_of(ys)
    parents: dict[int, tuple[int, Step] | None] = {start: None}
    queue = deque([start])
    explored = 0
    found = start == goal
    while queue and not found:
        cur = queue.popleft()
        explored += 1
        if explored > guard:
            raise InstanceTooLarge(f"BFS exceeded guard of {guard} states")
        size = cur.bit_count()
        moves: list[tuple[int, Step]] = []
        if size <= k:
            for into in g.vertices:
                if not cur >> into & 1:
                    moves.append((cur | (1 << into), Step.add(into)))
        for out in sorted(mask_to_set(cur)):
            moves.append((cur & ~(1 << out), Step.remove(out)))
        for nxt, step in moves:
            if nxt in parents or not is_ts(nxt):
                continue
            parents[nxt] = (cur, step)
            if nxt == goal:
                found = True
                break
            queue.append(nxt)
    if not found:
        return OracleReport(k=k, reconfigurable=False, explored=len(parents))
    steps = []
    node = goal
    while parents[node] is not None:
        prev, step = parents[node]
        steps.append(step)
        node = prev
    seq = ReconfigSequence(xs, tuple(reversed(steps)), TAR, k=k)
    return OracleReport(k=k, reconfigurable=True, shortest=seq, explored=len(parents))


def tj_components(
    g: ThresholdGraph,
    k: int,
    *,
    guard: int = DEFAULT_GUARD,
    cap: int = DEFAULT_CAP,
) -> OracleReport:
    """Full partition of the size-k target sets into TJ-connected classes."""
    sets = enumerate_target_sets(g, k, guard=guard, cap=cap)
    masks = [_mask_of(s) for s in sets]
    index = {m: i for i, m in enumerate(masks)}
    parent = list(range(len(masks)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, m in enumerate(masks):
        for out in sorted(mask_to_set(m)):
            base = m & ~(1 << out)
            for into in g.vertices:
                if m >> into & 1:
                    continue
                j = index.get(base | (1 << into))
                if j is not None:
                    ra, rb = find(i), find(j)
                    if ra != rb:
                        parent[ra] = rb
    groups: dict[int, list[frozenset[int]]] = {}
    for i, s in enumerate(sets):
        groups.setdefault(find(i), []).append(s)
    comps = tuple(
        tuple(sorted(grp, key=sorted)) for grp in
        sorted(groups.values(), key=lambda grp: sorted(min(grp, key=sorted)))
    )
    return OracleReport(
        k=k,
        num_target_sets=len(sets),
        components=comps,
        explored=len(sets),
    )
