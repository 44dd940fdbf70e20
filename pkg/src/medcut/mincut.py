"""Integer max-flow / min-cut on small-to-medium dense networks.

The solver is the classic blocking-flow (level graph) method: repeat a BFS
that layers the residual graph, then saturate it with a DFS that advances
along level-increasing arcs only. Capacities are nonnegative integers and
all arithmetic is exact.

After the flow is maximum, the canonical minimum cut is the set of nodes
still reachable from the source in the residual graph; it is the unique
inclusion-minimal source side among all minimum cuts and is therefore
deterministic and independent of arc insertion order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

__all__ = [
    "CAPACITY_LIMIT",
    "FlowNetwork",
    "CutResult",
    "ResidualNetwork",
    "max_flow",
    "min_cut",
]

# Total network capacity must fit a signed 64-bit accumulator so that flow
# values and cut capacities stay exact under any fixed-width backend.
CAPACITY_LIMIT = 2**63 - 1


@dataclass(frozen=True)
class FlowNetwork:
    """A capacitated digraph with distinguished source and sink.

    Arcs are (tail, head, capacity) triples. Antiparallel arcs are allowed
    and kept distinct; parallel same-direction arcs behave additively.
    Self-loops carry no flow and are rejected for clarity.
    """

    node_count: int
    source: int
    sink: int
    arcs: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.node_count < 2:
            raise ValueError("a flow network needs at least the source and the sink")
        if not 0 <= self.source < self.node_count:
            raise ValueError(f"source index {self.source} out of range")
        if not 0 <= self.sink < self.node_count:
            raise ValueError(f"sink index {self.sink} out of range")
        if self.source == self.sink:
            raise ValueError("source and sink must differ")
        arcs = tuple((int(u), int(v), int(c)) for u, v, c in self.arcs)
        total = 0
        for i, (u, v, c) in enumerate(arcs):
            if not (0 <= u < self.node_count and 0 <= v < self.node_count):
                raise ValueError(f"arc {i} has an endpoint out of range: ({u}, {v})")
            if u == v:
                raise ValueError(f"arc {i} is a self-loop on node {u}")
            if c < 0:
                raise ValueError(f"arc {i} has negative capacity {c}")
            total += c
        if total > CAPACITY_LIMIT:
            raise ValueError(f"total capacity {total} exceeds the 64-bit budget {CAPACITY_LIMIT}")
        object.__setattr__(self, "arcs", arcs)


@dataclass(frozen=True)
class CutResult:
    """A source-side node set with its cut capacity and the max-flow value."""

    source_side: frozenset[int]
    capacity: int
    flow_value: int


class ResidualNetwork:
    """Residual capacities left by a maximum flow; answers reachability queries."""

    __slots__ = ("node_count", "source", "sink", "_to", "_cap", "_adj", "_orig")

    def __init__(self, node_count, source, sink, to, cap, adj, orig):
        self.node_count = node_count
        self.source = source
        self.sink = sink
        self._to = to
        self._cap = cap
        self._adj = adj
        self._orig = orig

    def flow_on(self, arc_index: int) -> int:
        """Flow carried by input arc ``arc_index`` (0 <= flow <= capacity)."""
        return self._orig[arc_index] - self._cap[2 * arc_index]

    def residual_capacity(self, arc_index: int) -> int:
        """Remaining forward capacity of input arc ``arc_index``."""
        return self._cap[2 * arc_index]

    def reachable_from_source(self) -> frozenset[int]:
        """Nodes reachable from the source along positive residual arcs."""
        cap, to, adj = self._cap, self._to, self._adj
        seen = bytearray(self.node_count)
        seen[self.source] = 1
        queue = deque([self.source])
        while queue:
            u = queue.popleft()
            for e in adj[u]:
                if cap[e] > 0:
                    v = to[e]
                    if not seen[v]:
                        seen[v] = 1
                        queue.append(v)
        return frozenset(i for i, hit in enumerate(seen) if hit)


class _BlockingFlowSolver:
    """Single-use level-graph max-flow engine over one network."""

    __slots__ = ("n", "source", "sink", "to", "cap", "adj", "orig")

    def __init__(self, net: FlowNetwork):
        n = net.node_count
        to: list[int] = []
        cap: list[int] = []
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v, c in net.arcs:
            adj[u].append(len(to))
            to.append(v)
            cap.append(c)
            adj[v].append(len(to))
            to.append(u)
            cap.append(0)
        self.n = n
        self.source = net.source
        self.sink = net.sink
        self.to = to
        self.cap = cap
        self.adj = adj
        self.orig = tuple(c for _, _, c in net.arcs)

    def _levels(self) -> list[int]:
        to, cap, adj = self.to, self.cap, self.adj
        level = [-1] * self.n
        level[self.source] = 0
        queue = deque([self.source])
        while queue:
            u = queue.popleft()
            lv = level[u] + 1
            for e in adj[u]:
                if cap[e] > 0:
                    v = to[e]
                    if level[v] < 0:
                        level[v] = lv
                        queue.append(v)
        return level

    def run(self) -> int:
        """Augment to a maximum flow; returns the flow value."""
        to, cap, adj = self.to, self.cap, self.adj
        source, sink = self.source, self.sink
        total = 0
        while True:
            level = self._levels()
            if level[sink] < 0:
                return total
            # Blocking flow: walk from the source with per-node arc cursors,
            # augmenting every time the sink is reached and pruning dead ends.
            it = [0] * self.n
            path: list[int] = []
            u = source
            while True:
                if u == sink:
                    aug = min(cap[e] for e in path)
                    total += aug
                    retreat = -1
                    for i, e in enumerate(path):
                        cap[e] -= aug
                        cap[e ^ 1] += aug
                        if retreat < 0 and cap[e] == 0:
                            retreat = i
                    u = to[path[retreat] ^ 1]
                    del path[retreat:]
                    continue
                arcs_u = adj[u]
                iu = it[u]
                lv = level[u] + 1
                chosen = -1
                while iu < len(arcs_u):
                    e = arcs_u[iu]
                    if cap[e] > 0 and level[to[e]] == lv:
                        chosen = e
                        break
                    iu += 1
                it[u] = iu
                if chosen >= 0:
                    path.append(chosen)
                    u = to[chosen]
                elif u == source:
                    break
                else:
                    level[u] = -1  # dead end; drop u from this phase
                    e = path.pop()
                    u = to[e ^ 1]
                    it[u] += 1

    def residual(self) -> ResidualNetwork:
        return ResidualNetwork(self.n, self.source, self.sink, self.to, self.cap, self.adj, self.orig)


def max_flow(net: FlowNetwork) -> tuple[int, ResidualNetwork]:
    """Maximum s-t flow value plus the residual network it leaves behind."""
    solver = _BlockingFlowSolver(net)
    value = solver.run()
    return value, solver.residual()


def min_cut(net: FlowNetwork) -> CutResult:
    """Canonical minimum s-t cut: the residual-reachable source side.

    The returned capacity is recomputed as the sum of input-arc capacities
    leaving the source side; by max-flow/min-cut duality it equals the
    flow value.
    """
    value, residual = max_flow(net)
    side = residual.reachable_from_source()
    capacity = 0
    for u, v, c in net.arcs:
        if u in side and v not in side:
            capacity += c
    return CutResult(source_side=side, capacity=capacity, flow_value=value)


def enumerate_cut_values(net: FlowNetwork) -> list[tuple[frozenset[int], int]]:
    """All 2^(V-2) s-t partitions with their cut capacities, for small networks.

    Exhaustive and deliberately independent of the flow engine; intended
    for verification at desk scale.
    """
    inner = [v for v in range(net.node_count) if v not in (net.source, net.sink)]
    if len(inner) > 20:
        raise ValueError("cut enumeration is limited to 22-node networks")
    out = []
    for mask in range(1 << len(inner)):
        side = {net.source}
        for i, v in enumerate(inner):
            if mask >> i & 1:
                side.add(v)
        cut = sum(c for u, v, c in net.arcs if u in side and v not in side)
        out.append((frozenset(side), cut))
    return out
