"""End-to-end instance transformations with seed maps and equivalence checks.

Implements the degree-2/3 vertex-cover to cubic reduction (sigma gadgets),
the (3,3)-graph to bipartite planar ({3,4},2) reduction (upsilon, subdivision,
theta), the (3,3)-graph to bipartite 3-regular {1,2}-threshold reduction
(upsilon, subdivision, duplication, xi), and the hitting-set to split-graph
reduction.  Every output carries forward/backward seed maps and per-vertex
provenance tags.
"""

from __future__ import annotations

import dataclasses
from collections import deque
from itertools import combinations
from typing import Callable

from .errors import (
    BadDegree,
    EmptyFamilySet,
    InstanceTooLarge,
    MalformedLine,
    NotA33Graph,
    NotATargetSet,
    PreconditionViolated,
    SizeMismatch,
)
from .gadgets import (
    GadgetMap,
    attach_sigma,
    attach_theta,
    connect_xi,
    phi_sd,
    phi_upsilon,
    replace_upsilon,
    subdivision_map,
)
from .graph import PlainGraph, ThresholdGraph, disjoint_union, subdivide_edge, vc_to_tss
from .oracle import DEFAULT_GUARD, tj_decide

SeedMap = Callable[[frozenset[int]], frozenset[int]]


@dataclasses.dataclass
class ReductionOutput:
    """A transformed instance plus the machinery to move seeds across it."""

    graph: ThresholdGraph
    forward: SeedMap
    backward: SeedMap
    provenance: dict[int, str]
    gadgets: tuple[GadgetMap, ...]

    def format_provenance(self) -> str:
        lines = [f"origin {v} {tag}" for v, tag in sorted(self.provenance.items())]
        return "\n".join(lines) + "\n"


def _orig_tags(n: int) -> dict[int, str]:
    return {v: f"orig:{v}" for v in range(1, n + 1)}


# -- sigma: degree-{2,3} vertex cover to cubic -------------------------------


def reduce_vc23_to_cubic(g: PlainGraph) -> ReductionOutput:
    """Attach a sigma gadget to every degree-2 vertex; the result is 3-regular.

    Thresholds are then set to degrees, so target sets of the output are its
    vertex covers.  Minimum covers map as S -> S u (union of gadget minima).
    """
    degs = g.degrees
    for v in range(1, g.n + 1):
        if degs[v] not in (2, 3):
            raise BadDegree(f"vertex {v} has degree {degs[v]}, needs 2 or 3")
    cur = g
    maps: list[GadgetMap] = []
    prov = _orig_tags(g.n)
    for v in range(1, g.n + 1):
        if degs[v] == 2:
            cur, gm = attach_sigma(cur, v)
            maps.append(gm)
            for lbl, nid in gm.named_internals.items():
                prov[nid] = f"sigma:{v}:{lbl}"
    m_union = frozenset().union(*(gm.m_set for gm in maps)) if maps else frozenset()
    orig = frozenset(range(1, g.n + 1))

    def forward(s: frozenset[int]) -> frozenset[int]:
        return frozenset(s) | m_union

    def backward(s: frozenset[int]) -> frozenset[int]:
        return frozenset(s) & orig

    return ReductionOutput(
        graph=vc_to_tss(cur),
        forward=forward,
        backward=backward,
        provenance=prov,
        gadgets=tuple(maps),
    )


# -- upsilon + subdivision steps shared by the two (3,3) reductions ----------


def _check_33(g: ThresholdGraph) -> None:
    for v in g.vertices:
        if len(g.adj[v]) != 3 or g.tau[v] != 3:
            raise NotA33Graph(
                f"vertex {v} is a ({len(g.adj[v])},{g.tau[v]})-vertex, needs (3,3)"
            )


def _upsilon_all(g: ThresholdGraph, prov: dict[int, str]):
    cur = g
    maps = []
    for w in range(1, g.n + 1):
        cur, gm = replace_upsilon(cur, w)
        maps.append(gm)
        for lbl, nid in gm.named_internals.items():
            prov[nid] = f"upsilon:{w}:{lbl}"
    return cur, maps


def _subdivide_all(g: ThresholdGraph, prov: dict[int, str]):
    cur = g
    maps = []
    for u, v in g.edges:
        cur, w = subdivide_edge(cur, (u, v))
        maps.append(subdivision_map(u, v, w))
        prov[w] = f"sd:{u}-{v}"
    return cur, maps


def _project_back(s: frozenset[int], sd_maps, ups_maps) -> frozenset[int]:
    for gm in reversed(sd_maps):
        s = phi_sd(s, gm)
    for gm in reversed(ups_maps):
        s = phi_upsilon(s, gm)
    return s


def reduce_33_to_pb342(g: ThresholdGraph) -> ReductionOutput:
    """(3,3)-graph to a bipartite ({3,4},2)-graph via upsilon, subdivision, theta.

    Every vertex is gadget-replaced, every edge subdivided, and a theta gadget
    hangs off each (2,1)- and (3,1)-vertex, raising its threshold to 2.  A
    minimum seed X maps forward to X plus the union of the theta minima.
    """
    _check_33(g)
    prov = _orig_tags(g.n)
    h, ups_maps = _upsilon_all(g, prov)
    i_graph, sd_maps = _subdivide_all(h, prov)
    candidates = [
        v
        for v in i_graph.vertices
        if (len(i_graph.adj[v]), i_graph.tau[v]) in ((2, 1), (3, 1))
    ]
    cur = i_graph
    theta_maps = []
    for v in candidates:
        cur, gm = attach_theta(cur, v)
        theta_maps.append(gm)
        for lbl, nid in gm.named_internals.items():
            prov[nid] = f"theta:{v}:{lbl}"
    m_union = (
        frozenset().union(*(gm.m_set for gm in theta_maps)) if theta_maps else frozenset()
    )
    theta_internals = (
        frozenset().union(*(gm.internal_vertices for gm in theta_maps))
        if theta_maps
        else frozenset()
    )

    def forward(s: frozenset[int]) -> frozenset[int]:
        return frozenset(s) | m_union

    def backward(s: frozenset[int]) -> frozenset[int]:
        return _project_back(frozenset(s) - theta_internals, sd_maps, ups_maps)

    return ReductionOutput(
        graph=cur,
        forward=forward,
        backward=backward,
        provenance=prov,
        gadgets=tuple(ups_maps) + tuple(sd_maps) + tuple(theta_maps),
    )


def reduce_33_to_b312(g: ThresholdGraph) -> ReductionOutput:
    """(3,3)-graph to a bipartite (3,{1,2})-graph via duplication and xi gadgets.

    After gadget replacement and subdivision, the graph is doubled and each
    subdivision vertex's two copies are tied together by a xi gadget.  A seed
    X maps forward to both copies of X plus one a1 token per gadget.
    """
    _check_33(g)
    prov = _orig_tags(g.n)
    h, ups_maps = _upsilon_all(g, prov)
    i_graph, sd_maps = _subdivide_all(h, prov)
    n_i = i_graph.n
    doubled, shift = disjoint_union(i_graph, i_graph)
    for v in range(1, n_i + 1):
        prov[shift[v]] = prov[v] + ":copy2"
    two_one = [
        v
        for v in i_graph.vertices
        if (len(i_graph.adj[v]), i_graph.tau[v]) == (2, 1)
    ]
    cur = doubled
    xi_maps = []
    a1_tokens = []
    for v in two_one:
        cur, gm = connect_xi(cur, v, shift[v])
        xi_maps.append(gm)
        a1_tokens.append(gm.named_internals["a1"])
        for lbl, nid in gm.named_internals.items():
            prov[nid] = f"xi:{v}:{lbl}"
    a1_set = frozenset(a1_tokens)
    copy1 = frozenset(range(1, n_i + 1))

    def forward(s: frozenset[int]) -> frozenset[int]:
        s = frozenset(s)
        return s | frozenset(shift[v] for v in s) | a1_set

    def backward(s: frozenset[int]) -> frozenset[int]:
        return _project_back(frozenset(s) & copy1, sd_maps, ups_maps)

    return ReductionOutput(
        graph=cur,
        forward=forward,
        backward=backward,
        provenance=prov,
        gadgets=tuple(ups_maps) + tuple(sd_maps) + tuple(xi_maps),
    )


# -- hitting set to split graph ----------------------------------------------


@dataclasses.dataclass(frozen=True)
class HittingSystem:
    """A set family over universe 1..n with a requested hitting-set size k."""

    n: int
    family: tuple[frozenset[int], ...]
    k: int

    @staticmethod
    def build(n: int, family, k: int) -> "HittingSystem":
        fam = tuple(frozenset(f) for f in family)
        if not fam:
            raise EmptyFamilySet("the family must contain at least one set")
        for i, f in enumerate(fam, start=1):
            if not f:
                raise EmptyFamilySet(f"family set {i} is empty")
            for u in f:
                if not 1 <= u <= n:
                    raise MalformedLine(f"element {u} outside universe 1..{n}")
        if not 1 <= k <= n:
            raise MalformedLine(f"k={k} not in 1..{n}")
        return HittingSystem(n=n, family=fam, k=k)

    def is_hitting_set(self, s) -> bool:
        ss = frozenset(s)
        return all(ss & f for f in self.family)

    def hitting_sets(self, k: int | None = None) -> list[frozenset[int]]:
        k = self.k if k is None else k
        return [
            frozenset(c)
            for c in combinations(range(1, self.n + 1), k)
            if self.is_hitting_set(c)
        ]


def parse_hitting_system(text: str) -> HittingSystem:
    """Parse the ``p hs <n> <m> <k>`` format with one ``f <elems...>`` line per set."""
    header = None
    family = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "p":
                if header is not None or len(parts) != 5 or parts[1] != "hs":
                    raise MalformedLine(f"line {lineno}: expected 'p hs <n> <m> <k>'")
                header = (int(parts[2]), int(parts[3]), int(parts[4]))
            elif parts[0] == "f":
                family.append([int(p) for p in parts[1:]])
            else:
                raise MalformedLine(f"line {lineno}: unknown line kind {parts[0]!r}")
        except ValueError as exc:
            raise MalformedLine(f"line {lineno}: {exc}") from exc
    if header is None:
        raise MalformedLine("missing 'p hs' header")
    n, m, k = header
    if len(family) != m:
        raise MalformedLine(f"expected {m} family lines, got {len(family)}")
    return HittingSystem.build(n, family, k)


def serialize_hitting_system(hs: HittingSystem) -> str:
    lines = [f"p hs {hs.n} {len(hs.family)} {hs.k}"]
    for f in hs.family:
        lines.append("f " + " ".join(str(u) for u in sorted(f)))
    return "\n".join(lines) + "\n"


def reduce_hitting_to_split(hs: HittingSystem) -> ReductionOutput:
    """Hitting-set instance to a split graph whose size-k target sets are
    exactly the images of size-k hitting sets.

    Universe vertices plus an apex x form a clique, family vertices an
    independent set; tau(v_u) = (#sets containing u) + k + 1, tau(w_F) = 1,
    tau(x) = m + k.
    """
    n, m, k = hs.n, len(hs.family), hs.k
    if k >= n:
        raise PreconditionViolated(
            f"k={k} with |U|={n} leaves tau(v_u) above the degree bound; needs k < n"
        )
    # v_u = u for u in 1..n, w_Fj = n + j, x = n + m + 1
    x = n + m + 1
    edges = []
    occ = [0] * (n + 1)
    for j, f in enumerate(hs.family, start=1):
        w = n + j
        for u in sorted(f):
            edges.append((u, w))
            occ[u] += 1
        edges.append((w, x))
    clique = list(range(1, n + 1)) + [x]
    for a, b in combinations(clique, 2):
        edges.append((a, b))
    tau = [occ[u] + k + 1 for u in range(1, n + 1)] + [1] * m + [m + k]
    graph = ThresholdGraph.build(n + m + 1, edges, tau)
    prov = {u: f"universe:{u}" for u in range(1, n + 1)}
    prov.update({n + j: f"family:{j}" for j in range(1, m + 1)})
    prov[x] = "apex"
    universe = frozenset(range(1, n + 1))

    def forward(s: frozenset[int]) -> frozenset[int]:
        return frozenset(s)  # v_u shares u's id

    def backward(s: frozenset[int]) -> frozenset[int]:
        return frozenset(s) & universe

    return ReductionOutput(
        graph=graph,
        forward=forward,
        backward=backward,
        provenance=prov,
        gadgets=(),
    )


def hs_tj_decide(hs: HittingSystem, x, y, *, guard: int = DEFAULT_GUARD) -> bool:
    """BFS decision for hitting-set reconfiguration under token jumping."""
    xs, ys = frozenset(x), frozenset(y)
    if len(xs) != len(ys):
        raise SizeMismatch(f"|x|={len(xs)} != |y|={len(ys)}")
    for s in (xs, ys):
        if not hs.is_hitting_set(s):
            raise NotATargetSet(f"{sorted(s)} is not a hitting set")
    if xs == ys:
        return True
    seen = {xs}
    queue = deque([xs])
    while queue:
        cur = queue.popleft()
        if len(seen) > guard:
            raise InstanceTooLarge(f"BFS exceeded guard of {guard} states")
        for out in sorted(cur):
            for into in range(1, hs.n + 1):
                if into in cur:
                    continue
                nxt = (cur - {out}) | {into}
                if nxt in seen or not hs.is_hitting_set(nxt):
                    continue
                if nxt == ys:
                    return True
                seen.add(nxt)
                queue.append(nxt)
    return False


# -- instance-level equivalence checking --------------------------------------


@dataclasses.dataclass(frozen=True)
class EquivalenceVerdict:
    source: bool
    target: bool

    @property
    def equivalent(self) -> bool:
        return self.source == self.target


def verify_reduction(
    source_verdict: bool,
    out: ReductionOutput,
    x,
    y,
    *,
    guard: int = DEFAULT_GUARD,
) -> EquivalenceVerdict:
    """Compare a source instance's reconfigurability verdict with the oracle
    verdict on the transformed instance between the mapped seeds.

    Raises InstanceTooLarge when the transformed search exceeds the guard;
    callers treat that as a skip, not a failure.
    """
    fx, fy = out.forward(frozenset(x)), out.forward(frozenset(y))
    target = tj_decide(out.graph, fx, fy, guard=guard).reconfigurable
    return EquivalenceVerdict(source=bool(source_verdict), target=bool(target))
