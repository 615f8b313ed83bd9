"""Polynomial-time deciders and sequence builders for tractable classes.

Covers threshold-1 graphs, graphs of maximum degree 2 (paths and cycles,
including the "terrible cycle" obstruction), and trees via Chen's bottom-up
selection algorithm with canonical-seed routing.
"""

from __future__ import annotations

import dataclasses
from typing import Callable

from .activation import is_target_set
from .errors import (
    DegreeTooLarge,
    NotACycle,
    NotAPath,
    NotATargetSet,
    NotATree,
    PreconditionViolated,
)
from .graph import ThresholdGraph, classify
from .reconfig import TAR, TJ, ReconfigSequence, Step, tar_to_tj


# -- degree-2 decomposition ------------------------------------------------


@dataclasses.dataclass(frozen=True)
class Deg2Component:
    """One path or cycle component of a maximum-degree-2 graph.

    ``order`` lists the vertices along the component (for cycles, starting at
    the smallest id and heading toward its smaller neighbor); ``w`` is the
    subsequence of threshold-2 vertices.  A cycle is terrible when it has an
    even number m >= 4 of threshold-2 vertices.
    """

    kind: str  # "path" | "cycle"
    order: tuple[int, ...]
    w: tuple[int, ...]
    terrible: bool

    @property
    def m(self) -> int:
        return len(self.w)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.order)

    @property
    def min_size(self) -> int:
        if self.kind == "path":
            return self.m // 2 + 1
        if self.m == 0:
            return 1
        return self.m // 2 if self.m % 2 == 0 else (self.m + 1) // 2


@dataclasses.dataclass(frozen=True)
class Deg2Decomposition:
    components: tuple[Deg2Component, ...]

    @property
    def min_size(self) -> int:
        return sum(c.min_size for c in self.components)


def decompose_deg2(g: ThresholdGraph) -> Deg2Decomposition:
    """Partition a maximum-degree-2 graph into its path and cycle components."""
    for v in g.vertices:
        if len(g.adj[v]) > 2:
            raise DegreeTooLarge(f"vertex {v} has degree {len(g.adj[v])} > 2")
    comps = []
    for comp in g.components():
        degs = {v: len(g.adj[v]) for v in comp}
        ends = sorted(v for v in comp if degs[v] == 1)
        if ends:
            start = ends[0]
            kind = "path"
        else:
            start = comp[0]
            kind = "cycle"
        order = [start]
        prev = None
        cur = start
        while True:
            nxts = [u for u in g.adj[cur] if u != prev]
            if kind == "cycle" and cur == start:
                nxts = [min(nxts)]
            if not nxts:
                break
            prev, cur = cur, nxts[0]
            if kind == "cycle" and cur == start:
                break
            order.append(cur)
        w = tuple(v for v in order if g.tau[v] == 2)
        m = len(w)
        comps.append(
            Deg2Component(
                kind=kind,
                order=tuple(order),
                w=w,
                terrible=(kind == "cycle" and m >= 4 and m % 2 == 0),
            )
        )
    return Deg2Decomposition(components=tuple(comps))


# -- trees ------------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class TreePlan:
    """Output of Chen's algorithm plus the canonical-seed packing.

    ``s_list`` orders the canonical minimum target set S* by postorder;
    ``packing[i]`` is the region P_i that every target set must hit, with
    S* & P_i == {s_list[i]}.
    """

    root: int
    parent: tuple[int, ...]
    tau_prime: tuple[int, ...]
    s_star: frozenset[int]
    s_list: tuple[int, ...]
    packing: tuple[frozenset[int], ...]

    def format_packing(self) -> str:
        lines = []
        for i, p in enumerate(self.packing, start=1):
            lines.append(f"packing {i}: " + " ".join(str(v) for v in sorted(p)))
        return "\n".join(lines) + "\n"


def chen_tree(g: ThresholdGraph, root: int | None = None) -> TreePlan:
    """Bottom-up minimum target set of a tree.

    Scans vertices in postorder (children in ascending id); tau'(v) subtracts
    the children that the current selection would have activated.  A non-root
    joins S* when tau'(v) >= 2, the root when tau'(root) >= 1.
    """
    rep = classify(g)
    if not rep.is_tree:
        raise NotATree("graph is not a tree")
    if root is None:
        root = 1
    g.check_vertex(root)
    parent = [0] * (g.n + 1)
    order = []  # preorder
    parent[root] = 0
    stack = [root]
    seen = {root}
    while stack:
        v = stack.pop()
        order.append(v)
        for u in reversed(g.adj[v]):
            if u not in seen:
                seen.add(u)
                parent[u] = v
                stack.append(u)
    children: list[list[int]] = [[] for _ in range(g.n + 1)]
    for v in order:
        if v != root:
            children[parent[v]].append(v)
    for c in children:
        c.sort()
    post: list[int] = []
    stack2: list[tuple[int, bool]] = [(root, False)]
    while stack2:
        v, done = stack2.pop()
        if done:
            post.append(v)
            continue
        stack2.append((v, True))
        for u in reversed(children[v]):
            stack2.append((u, False))
    tau_prime = [0] * (g.n + 1)
    s_star: set[int] = set()
    for v in post:
        activated = sum(
            1 for w in children[v] if tau_prime[w] == 0 or w in s_star
        )
        # floored at 0: tau' counts the remaining requirement, and a vertex
        # with more activated children than its threshold is itself activated
        tau_prime[v] = max(0, g.tau[v] - activated)
        if v != root and tau_prime[v] >= 2:
            s_star.add(v)
        if v == root and tau_prime[v] >= 1:
            s_star.add(v)
    s_list = tuple(v for v in post if v in s_star)
    # nearest S*-ancestor-or-self, computed root-down (preorder)
    nearest = [0] * (g.n + 1)
    for v in order:
        if v in s_star:
            nearest[v] = v
        elif v == root:
            nearest[v] = 0
        else:
            nearest[v] = nearest[parent[v]]
    packing = tuple(
        frozenset(v for v in g.vertices if nearest[v] == s) for s in s_list
    )
    return TreePlan(
        root=root,
        parent=tuple(parent),
        tau_prime=tuple(tau_prime),
        s_star=frozenset(s_star),
        s_list=s_list,
        packing=packing,
    )


def tree_tar_to_canonical(
    g: ThresholdGraph, plan: TreePlan, s
) -> ReconfigSequence:
    """|S|-TAR route from any target set S of a tree to the canonical S*.

    For each canonical seed in postorder: add it if absent, then clear the
    rest of its packing region; finish by removing leftovers outside the
    packing.  Every intermediate set is a superset of a target set.
    """
    ss = g.check_seed(s)
    if not is_target_set(g, ss):
        raise NotATargetSet(f"{sorted(ss)} is not a target set")
    cur = set(ss)
    steps: list[Step] = []
    for s_i, p_i in zip(plan.s_list, plan.packing):
        if s_i not in cur:
            steps.append(Step.add(s_i))
            cur.add(s_i)
        for v in sorted(cur & (p_i - {s_i})):
            steps.append(Step.remove(v))
            cur.remove(v)
    for v in sorted(cur - plan.s_star):
        steps.append(Step.remove(v))
        cur.remove(v)
    return ReconfigSequence(ss, tuple(steps), TAR, k=len(ss))


def solve_tree(
    g: ThresholdGraph, x, y, *, model: str = TJ
) -> tuple[bool, ReconfigSequence]:
    """Trees: any two same-size target sets are reconfigurable.

    Routes x down to the canonical S* and back up to y; the TAR peak stays
    within max(|x|,|y|)+1.
    """
    xs, ys = g.check_seed(x), g.check_seed(y)
    if len(xs) != len(ys):
        raise PreconditionViolated(f"|x|={len(xs)} != |y|={len(ys)}")
    plan = chen_tree(g)
    down = tree_tar_to_canonical(g, plan, xs)
    up = tree_tar_to_canonical(g, plan, ys)
    seq = _stitch_tar(xs, [down.steps, _reverse_steps(up.steps)], k=len(xs))
    return True, (tar_to_tj(seq) if model == TJ else seq)


# -- threshold-1 graphs ------------------------------------------------------


def _threshold1_route(g: ThresholdGraph, s: frozenset[int]) -> list[Step]:
    """TAR steps from s to the canonical one-seed-per-component set."""
    steps: list[Step] = []
    cur = set(s)
    for comp in g.components():
        canon = comp[0]
        if canon not in cur:
            steps.append(Step.add(canon))
            cur.add(canon)
        for v in sorted(cur & set(comp) - {canon}):
            steps.append(Step.remove(v))
            cur.remove(v)
    return steps


def solve_threshold1(
    g: ThresholdGraph, x, y, *, model: str = TJ
) -> tuple[bool, ReconfigSequence]:
    """Threshold-1 graphs: always reconfigurable via one canonical seed per component."""
    if any(g.tau[v] != 1 for v in g.vertices):
        raise PreconditionViolated("graph has a vertex of threshold != 1")
    xs, ys = g.check_seed(x), g.check_seed(y)
    if len(xs) != len(ys):
        raise PreconditionViolated(f"|x|={len(xs)} != |y|={len(ys)}")
    if not is_target_set(g, xs) or not is_target_set(g, ys):
        raise PreconditionViolated("endpoints must be target sets")
    seq = _stitch_tar(
        xs,
        [tuple(_threshold1_route(g, xs)), _reverse_steps(tuple(_threshold1_route(g, ys)))],
        k=len(xs),
    )
    return True, (tar_to_tj(seq) if model == TJ else seq)


# -- paths and cycles --------------------------------------------------------


def _induced(g: ThresholdGraph, vertices: frozenset[int]):
    """Induced subgraph on a union of components, with id maps."""
    order = sorted(vertices)
    to_local = {v: i + 1 for i, v in enumerate(order)}
    edges = [
        (to_local[u], to_local[v]) for u, v in g.edges if u in vertices and v in vertices
    ]
    sub = ThresholdGraph.build(len(order), edges, [g.tau[v] for v in order])
    return sub, tuple([0] + order), to_local


def _map_steps(steps, to_global) -> list[Step]:
    out = []
    for st in steps:
        if st.kind == "add":
            out.append(Step.add(to_global[st.into]))
        elif st.kind == "remove":
            out.append(Step.remove(to_global[st.out]))
        elif st.kind == "jump":
            out.append(Step.jump(to_global[st.out], to_global[st.into]))
        else:
            out.append(Step.noop())
    return out


def _reverse_steps(steps) -> tuple[Step, ...]:
    rev = []
    for st in reversed(steps):
        if st.kind == "add":
            rev.append(Step.remove(st.into))
        elif st.kind == "remove":
            rev.append(Step.add(st.out))
        elif st.kind == "jump":
            rev.append(Step.jump(st.into, st.out))
        else:
            rev.append(Step.noop())
    return tuple(rev)


def _stitch_tar(start: frozenset[int], step_groups, k: int) -> ReconfigSequence:
    steps: list[Step] = []
    for grp in step_groups:
        steps.extend(grp)
    return ReconfigSequence(start, tuple(steps), TAR, k=k)


def _path_canonical_set(comp: Deg2Component) -> frozenset[int]:
    m = comp.m
    if m == 0:
        return frozenset({comp.order[0]})
    if m % 2 == 1:
        idx = range(0, m, 2)
    else:
        idx = list(range(0, m - 1, 2)) + [m - 1]
    return frozenset(comp.w[i] for i in idx)


def _removal_route(cur: set[int], keep: frozenset[int], steps: list[Step]) -> None:
    for v in sorted(cur - keep):
        steps.append(Step.remove(v))
        cur.remove(v)


def _path_route(g: ThresholdGraph, comp: Deg2Component, s: frozenset[int]) -> tuple[list[Step], frozenset[int]]:
    """TAR steps from s (a target set of the path component) to its canonical minimum.

    Delegates to the tree machinery: down to the Chen set of the path, then
    the reversed route from the canonical parity set.
    """
    canonical = _path_canonical_set(comp)
    steps: list[Step] = []
    cur = set(s)
    if cur >= canonical:
        _removal_route(cur, canonical, steps)
        return steps, canonical
    sub, to_global, to_local = _induced(g, comp.vertices)
    plan = chen_tree(sub)
    down = tree_tar_to_canonical(sub, plan, frozenset(to_local[v] for v in s))
    up = tree_tar_to_canonical(sub, plan, frozenset(to_local[v] for v in canonical))
    steps = _map_steps(down.steps, to_global) + _map_steps(
        _reverse_steps(up.steps), to_global
    )
    return steps, canonical


def _cycle_intervals_even(comp: Deg2Component, shift: int) -> list[tuple[int, ...]]:
    """Arcs [w'_{2i-1} .. w'_{2i}] of the relabeled cycle, 0-based shift."""
    order = comp.order
    n = len(order)
    pos = {v: i for i, v in enumerate(order)}
    wpos = [pos[comp.w[(shift + j) % comp.m]] for j in range(comp.m)]
    intervals = []
    for i in range(comp.m // 2):
        a, b = wpos[2 * i], wpos[2 * i + 1]
        arc = []
        j = a
        while True:
            arc.append(order[j])
            if j == b:
                break
            j = (j + 1) % n
        intervals.append(tuple(arc))
    return intervals


def _even_cycle_route(comp: Deg2Component, s: frozenset[int]) -> tuple[list[Step], frozenset[int]]:
    w = comp.w
    m = comp.m
    s1 = frozenset(w[i] for i in range(0, m, 2))
    s2 = frozenset(w[i] for i in range(1, m, 2))
    steps: list[Step] = []
    cur = set(s)
    if cur >= s1:
        _removal_route(cur, s1, steps)
        return steps, s1
    if cur >= s2:
        _removal_route(cur, s2, steps)
        return steps, s2
    # anchor the relabeling at the smallest-id threshold-2 vertex missing from s
    anchor = min(v for v in w if v not in s)
    shift = w.index(anchor)
    intervals = _cycle_intervals_even(comp, shift)
    final = frozenset(w[(shift + j) % m] for j in range(1, m, 2))
    for i, arc in enumerate(intervals):
        tgt = w[(shift + 2 * i + 1) % m]
        if tgt not in cur:
            steps.append(Step.add(tgt))
            cur.add(tgt)
        for v in sorted(cur & (set(arc) - {tgt})):
            steps.append(Step.remove(v))
            cur.remove(v)
    _removal_route(cur, final, steps)
    return steps, final


def _odd_cycle_route(comp: Deg2Component, s: frozenset[int]) -> tuple[list[Step], frozenset[int], int]:
    """Route to the all-threshold-2 minimum anchored where s first meets an interval."""
    order = comp.order
    n = len(order)
    m = comp.m
    pos = {v: i for i, v in enumerate(order)}
    wpos = [pos[v] for v in comp.w]
    # interval j (0-based): from w_j up to, not including, w_{j+1}; for m=1
    # the single interval wraps the whole cycle
    intervals = []
    for j in range(m):
        a, b = wpos[j], wpos[(j + 1) % m]
        arc = [order[a]]
        i = (a + 1) % n
        while i != b:
            arc.append(order[i])
            i = (i + 1) % n
        intervals.append(tuple(arc))
    p = next(j for j in range(m) if s & set(intervals[j]))
    steps: list[Step] = []
    cur = set(s)

    def clear(arcs, tgt):
        if tgt not in cur:
            steps.append(Step.add(tgt))
            cur.add(tgt)
        drop = set()
        for arc in arcs:
            drop |= set(arc)
        for v in sorted(cur & (drop - {tgt})):
            steps.append(Step.remove(v))
            cur.remove(v)

    clear([intervals[p]], comp.w[p])
    for j in range(1, (m - 1) // 2 + 1):
        tgt = comp.w[(p + 2 * j) % m]
        clear([intervals[(p + 2 * j - 1) % m], intervals[(p + 2 * j) % m]], tgt)
    final = frozenset(comp.w[(p + 2 * t) % m] for t in range((m - 1) // 2 + 1))
    assert cur == final
    return steps, final, p


def _zero_cycle_route(comp: Deg2Component, s: frozenset[int]) -> tuple[list[Step], frozenset[int]]:
    canon = frozenset({comp.order[0]})
    steps: list[Step] = []
    cur = set(s)
    if comp.order[0] not in cur:
        steps.append(Step.add(comp.order[0]))
        cur.add(comp.order[0])
    _removal_route(cur, canon, steps)
    return steps, canon


def even_cycle_flip_steps(comp: Deg2Component, current: frozenset[int]) -> tuple[list[Step], frozenset[int]]:
    """(m/2+1)-TAR flip between the two minima of an even cycle.

    Relabels so the current set sits on odd positions, then: add the last w,
    jump along even positions, drop the second-to-last w.
    """
    w = comp.w
    m = comp.m
    s1 = frozenset(w[i] for i in range(0, m, 2))
    shift = 0 if current == s1 else 1
    if current != frozenset(w[(shift + i) % m] for i in range(0, m, 2)):
        raise PreconditionViolated("flip must start at a minimum target set of the cycle")
    lab = [w[(shift + i) % m] for i in range(m)]
    steps = [Step.add(lab[m - 1])]
    for i in range(1, m // 2):
        steps.append(Step.add(lab[2 * i - 1]))
        steps.append(Step.remove(lab[2 * i - 2]))
    steps.append(Step.remove(lab[m - 2]))
    final = frozenset(lab[i] for i in range(1, m, 2))
    return steps, final


def odd_cycle_rotation_steps(comp: Deg2Component, p: int, q: int) -> list[Step]:
    """TJ rotation S*_p -> S*_q of an odd cycle, emitted as add/remove pairs."""
    m = comp.m
    steps: list[Step] = []
    while p != q:
        steps.append(Step.add(comp.w[(p + 1) % m]))
        steps.append(Step.remove(comp.w[p]))
        p = (p + 2) % m
    return steps


def _component_route(
    g: ThresholdGraph, comp: Deg2Component, s: frozenset[int]
) -> tuple[list[Step], frozenset[int], int | None]:
    if comp.kind == "path":
        steps, final = _path_route(g, comp, s)
        return steps, final, None
    if comp.m == 0:
        steps, final = _zero_cycle_route(comp, s)
        return steps, final, None
    if comp.m % 2 == 0:
        steps, final = _even_cycle_route(comp, s)
        return steps, final, None
    steps, final, anchor = _odd_cycle_route(comp, s)
    return steps, final, anchor


@dataclasses.dataclass(frozen=True)
class CycleAnalysis:
    """Case record and canonical routing for one cycle graph."""

    component: Deg2Component
    min_size: int
    case: str  # "zero" | "even" | "odd"
    minimum_sets: tuple[frozenset[int], ...]
    to_canonical: ReconfigSequence
    canonical: frozenset[int]
    anchor: int | None


def cycle_analyze(g: ThresholdGraph, s) -> CycleAnalysis:
    """Analyze a cycle graph and build the TAR route from s to a special minimum."""
    dec = decompose_deg2(g)
    if len(dec.components) != 1 or dec.components[0].kind != "cycle":
        raise NotACycle("graph is not a single cycle")
    comp = dec.components[0]
    ss = g.check_seed(s)
    if not is_target_set(g, ss):
        raise NotATargetSet(f"{sorted(ss)} is not a target set")
    steps, final, anchor = _component_route(g, comp, ss)
    m = comp.m
    if m == 0:
        case = "zero"
        minima = tuple(frozenset({v}) for v in comp.order)
    elif m % 2 == 0:
        case = "even"
        minima = (
            frozenset(comp.w[i] for i in range(0, m, 2)),
            frozenset(comp.w[i] for i in range(1, m, 2)),
        )
    else:
        case = "odd"
        minima = tuple(
            frozenset(comp.w[(p + 2 * t) % m] for t in range((m - 1) // 2 + 1))
            for p in range(m)
        )
    return CycleAnalysis(
        component=comp,
        min_size=comp.min_size,
        case=case,
        minimum_sets=minima,
        to_canonical=ReconfigSequence(ss, tuple(steps), TAR, k=len(ss)),
        canonical=final,
        anchor=anchor,
    )


def path_canonical(
    g: ThresholdGraph,
) -> tuple[int, frozenset[int], Callable[[frozenset[int]], ReconfigSequence]]:
    """Minimum size, canonical minimum set, and TAR builder for a path graph."""
    dec = decompose_deg2(g)
    if len(dec.components) != 1 or dec.components[0].kind != "path":
        raise NotAPath("graph is not a single path")
    comp = dec.components[0]
    canonical = _path_canonical_set(comp)

    def builder(s) -> ReconfigSequence:
        ss = g.check_seed(s)
        if not is_target_set(g, ss):
            raise NotATargetSet(f"{sorted(ss)} is not a target set")
        steps, _ = _path_route(g, comp, ss)
        return ReconfigSequence(ss, tuple(steps), TAR, k=len(ss))

    return comp.min_size, canonical, builder


# -- the full maximum-degree-2 solver ---------------------------------------


def solve_maxdeg2(
    g: ThresholdGraph, x, y, *, model: str = TJ
) -> tuple[bool, ReconfigSequence | None]:
    """Decide TJ-reconfigurability on a maximum-degree-2 graph, with a sequence.

    The answer is no exactly when both endpoints are minimum and some terrible
    cycle carries different restrictions.  Otherwise the route runs in three
    phases: take every component of x down to a canonical minimum, resolve the
    per-cycle mismatches (flips, jumps, rotations) at the global minimum where
    a spare token is guaranteed, then replay y's descent backwards.
    """
    xs, ys = g.check_seed(x), g.check_seed(y)
    if len(xs) != len(ys):
        raise PreconditionViolated(f"|x|={len(xs)} != |y|={len(ys)}")
    dec = decompose_deg2(g)
    if not is_target_set(g, xs) or not is_target_set(g, ys):
        raise PreconditionViolated("endpoints must be target sets")
    k = len(xs)
    min_total = dec.min_size
    if k == min_total and any(
        c.terrible and (xs & c.vertices) != (ys & c.vertices)
        for c in dec.components
    ):
        return False, None
    if xs == ys:
        return True, ReconfigSequence(xs, (), TJ if model == TJ else TAR, k=k)

    steps: list[Step] = []
    finals_x: dict[int, tuple[frozenset[int], int | None]] = {}
    finals_y: dict[int, tuple[frozenset[int], int | None]] = {}
    routes_y: dict[int, list[Step]] = {}
    for i, comp in enumerate(dec.components):
        st, final, anchor = _component_route(g, comp, xs & comp.vertices)
        steps += st
        finals_x[i] = (final, anchor)
        st_y, final_y, anchor_y = _component_route(g, comp, ys & comp.vertices)
        routes_y[i] = st_y
        finals_y[i] = (final_y, anchor_y)

    for i, comp in enumerate(dec.components):
        fx, ax = finals_x[i]
        fy, ay = finals_y[i]
        if fx == fy:
            continue
        if comp.kind != "cycle":
            raise AssertionError("path canonicals are unique")
        if comp.m % 2 == 1:
            steps += odd_cycle_rotation_steps(comp, ax, ay)
        elif comp.m == 2:
            add_v = next(iter(fy - fx))
            rem_v = next(iter(fx - fy))
            steps.append(Step.add(add_v))
            steps.append(Step.remove(rem_v))
        else:
            flip, final = even_cycle_flip_steps(comp, fx)
            assert final == fy
            steps += flip

    for i in range(len(dec.components) - 1, -1, -1):
        steps += _reverse_steps(tuple(routes_y[i]))

    seq = _stitch_tar(xs, [steps], k=k)
    assert seq.end == ys
    return True, (tar_to_tj(seq) if model == TJ else seq)


def maxdeg2_min_size(g: ThresholdGraph) -> int:
    """Minimum target set size of a maximum-degree-2 graph."""
    return decompose_deg2(g).min_size
