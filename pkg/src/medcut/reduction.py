"""Build cut networks from pair counts and map minimum cuts back to orders.

Two constructions are provided. The literal network has one node per
alternative plus one per ordered pair; each pair node is tied to its first
alternative by a pair of uncuttable heavy arcs, so that for every
alternative bipartition the cut picks up exactly the disagreement cost of
the corresponding two-tier order: 2*N(b,a) + E(b,a) when a is ranked above
b, and N(a,b) + N(b,a) when they share a class. The contracted network
folds every pair node into its alternative, producing an equivalent
(m+2)-node instance whose cuts have identical capacities; it is the
default because it is much smaller.

Both require a complete profile: the cut capacity has no term for pairs a
voter leaves incomparable, so those profiles are rejected here and served
by the exhaustive solver instead.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .mincut import CAPACITY_LIMIT, CutResult, FlowNetwork, min_cut
from .relations import (
    AlternativeSet,
    DichotomousOrder,
    IncompleteRelationError,
    PairStats,
    Profile,
    first_incomparable_pair,
    pair_stats,
    score,
)

__all__ = [
    "VARIANTS",
    "NetworkLayout",
    "SolveResult",
    "CutConsistencyError",
    "choose_big_l",
    "build_literal_network",
    "build_contracted_network",
    "extract_order",
    "solve",
    "solve_nonempty",
]

VARIANTS = ("literal", "contracted")


class CutConsistencyError(RuntimeError):
    """A solved cut violated a structural guarantee; indicates a solver bug."""


@dataclass(frozen=True)
class NetworkLayout:
    """Node bookkeeping for a built network.

    ``node_of_pair`` and ``big_l`` are populated for the literal variant
    only.
    """

    variant: str
    source: int
    sink: int
    node_of_alternative: tuple[int, ...]
    node_of_pair: dict | None = None
    big_l: int | None = None


@dataclass(frozen=True)
class SolveResult:
    """An optimal order with its independently recomputed disagreement count.

    ``cut_capacity`` is the minimum-cut value that produced the order (for
    the exhaustive solver it is set equal to ``disagreements``); the two
    must agree on every solved instance. ``per_pair`` optionally breaks the
    total down by unordered alternative pair.
    """

    order: DichotomousOrder
    disagreements: int
    cut_capacity: int
    per_pair: dict[tuple[int, int], int] | None = None


def _require_complete_stats(stats: PairStats) -> None:
    if not stats.is_complete():
        a, b = stats.first_incomparable_pair()
        raise IncompleteRelationError(
            f"pair ({a}, {b}) is incomparable for {int(stats.i_incomp[a, b])} voter(s); "
            "the cut reduction requires a complete profile (the exhaustive solver does not)",
            pair=(a, b),
        )


def choose_big_l(stats: PairStats) -> int:
    """Weight making the alternative/pair-node tie arcs uncuttable.

    Returns 1 + sum(N) + sum(E) over all ordered pairs. Every minimum cut
    then avoids crossing an L-arc: a cut crossing one costs at least L,
    while the all-in-one-class order already gives an L-free cut of
    capacity sum(N) < L. This replaces an astronomically large constant
    with the smallest bound that preserves the guarantee.
    """
    big_l = 1 + int(stats.n_strict.sum()) + int(stats.e_tied.sum())
    if big_l > CAPACITY_LIMIT:
        raise ValueError(f"pair counts are too large: L = {big_l} exceeds the 64-bit budget")
    return big_l


def build_literal_network(stats: PairStats) -> tuple[FlowNetwork, NetworkLayout]:
    """Construct the full pair-gadget network.

    Nodes: source, sink, one per alternative, one per ordered pair (a, b).
    For every ordered pair: source -> v(a,b) with weight N(a,b),
    v(a,b) -> sink with weight N(b,a), and the two L-arcs a <-> v(a,b).
    For every unordered pair, inserted once: a -> b with weight E(b,a) and
    b -> a with weight E(a,b). Inserting the E-arcs per ordered pair would
    double the tied-versus-strict cost ratio and break the capacity
    equality, so they are deliberately added once.
    """
    _require_complete_stats(stats)
    m = stats.m
    n_mat, e_mat = stats.n_strict, stats.e_tied
    big_l = choose_big_l(stats)
    total = 2 * int(n_mat.sum()) + 2 * int(e_mat.sum()) + 2 * m * (m - 1) * big_l
    if total > CAPACITY_LIMIT:
        raise ValueError(f"literal network capacity {total} exceeds the 64-bit budget")
    source, sink = 0, 1
    alt_node = tuple(range(2, 2 + m))
    pair_node: dict[tuple[int, int], int] = {}
    arcs: list[tuple[int, int, int]] = []
    next_node = 2 + m
    for a in range(m):
        for b in range(m):
            if a == b:
                continue
            v = next_node
            next_node += 1
            pair_node[(a, b)] = v
            arcs.append((source, v, int(n_mat[a, b])))
            arcs.append((v, sink, int(n_mat[b, a])))
            arcs.append((alt_node[a], v, big_l))
            arcs.append((v, alt_node[a], big_l))
    for a in range(m):
        for b in range(a + 1, m):
            arcs.append((alt_node[a], alt_node[b], int(e_mat[b, a])))
            arcs.append((alt_node[b], alt_node[a], int(e_mat[a, b])))
    net = FlowNetwork(node_count=next_node, source=source, sink=sink, arcs=tuple(arcs))
    layout = NetworkLayout("literal", source, sink, alt_node, pair_node, big_l)
    return net, layout


def build_contracted_network(stats: PairStats) -> tuple[FlowNetwork, NetworkLayout]:
    """Construct the folded (m+2)-node network.

    Folding each pair node v(a,b) into alternative a turns its source and
    sink arcs into source -> a with weight sum_b N(a,b) and a -> sink with
    weight sum_b N(b,a); the tie arcs between alternatives become
    a -> b with weight E(a,b). Every alternative bipartition has the same
    cut capacity here as its L-free cut in the literal network.
    Zero-capacity arcs are omitted.
    """
    _require_complete_stats(stats)
    m = stats.m
    n_mat, e_mat = stats.n_strict, stats.e_tied
    source, sink = 0, 1
    alt_node = tuple(range(2, 2 + m))
    row = n_mat.sum(axis=1)
    col = n_mat.sum(axis=0)
    arcs: list[tuple[int, int, int]] = []
    for a in range(m):
        if row[a] > 0:
            arcs.append((source, alt_node[a], int(row[a])))
        if col[a] > 0:
            arcs.append((alt_node[a], sink, int(col[a])))
    for a in range(m):
        ea = e_mat[a]
        for b in range(m):
            if a != b and ea[b] > 0:
                arcs.append((alt_node[a], alt_node[b], int(ea[b])))
    net = FlowNetwork(node_count=2 + m, source=source, sink=sink, arcs=tuple(arcs))
    layout = NetworkLayout("contracted", source, sink, alt_node)
    return net, layout


def extract_order(cut: CutResult, layout: NetworkLayout, universe: AlternativeSet) -> DichotomousOrder:
    """Read the two-tier order off a cut: source side = top class.

    For literal layouts this also verifies that every pair node landed on
    the same side as its alternative; since the L-arcs join exactly those
    two nodes, this simultaneously certifies that no L-arc is crossed.
    """
    side = cut.source_side
    top = {a for a, node in enumerate(layout.node_of_alternative) if node in side}
    if layout.variant == "literal":
        for (a, b), v in layout.node_of_pair.items():
            if (v in side) != (layout.node_of_alternative[a] in side):
                raise CutConsistencyError(
                    f"pair node v({universe.names[a]},{universe.names[b]}) is separated from "
                    f"{universe.names[a]}: an uncuttable arc was crossed by a minimum cut"
                )
    return DichotomousOrder(universe, top)


def _check_voters_complete(p: Profile) -> None:
    for i, r in enumerate(p.voters):
        pair = first_incomparable_pair(r)
        if pair is not None:
            a, b = pair
            names = (p.universe.names[a], p.universe.names[b])
            raise IncompleteRelationError(
                f"voter {i} leaves ({names[0]}, {names[1]}) incomparable; the cut reduction "
                "requires complete relations (use the exhaustive solver for incomplete profiles)",
                voter=i,
                pair=names,
            )


def _pair_breakdown(stats: PairStats, order: DichotomousOrder) -> dict[tuple[int, int], int]:
    n_mat, e_mat = stats.n_strict, stats.e_tied
    out: dict[tuple[int, int], int] = {}
    for a in range(stats.m):
        for b in range(a + 1, stats.m):
            if (a in order.top) == (b in order.top):
                cost = int(n_mat[a, b] + n_mat[b, a])
            elif a in order.top:
                cost = int(2 * n_mat[b, a] + e_mat[b, a])
            else:
                cost = int(2 * n_mat[a, b] + e_mat[a, b])
            out[(a, b)] = cost
    return out


def solve(p: Profile, variant: str = "contracted", *, breakdown: bool = False) -> SolveResult:
    """Find a two-tier order with minimum total disagreement.

    Builds the requested network variant from the profile's pair counts,
    takes the canonical minimum cut, and reads the order off its source
    side (empty classes are permitted; see :func:`solve_nonempty`). The
    returned disagreement count is recomputed from the profile, not taken
    from the cut.

    Raises :class:`IncompleteRelationError`, naming the voter and pair, if
    any voter leaves a pair incomparable.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    _check_voters_complete(p)
    stats = pair_stats(p)
    if variant == "literal":
        net, layout = build_literal_network(stats)
    else:
        net, layout = build_contracted_network(stats)
    cut = min_cut(net)
    order = extract_order(cut, layout, p.universe)
    disagreements = score(p, order)
    per_pair = _pair_breakdown(stats, order) if breakdown else None
    return SolveResult(order=order, disagreements=disagreements, cut_capacity=cut.capacity, per_pair=per_pair)


def solve_nonempty(p: Profile, *, breakdown: bool = False) -> SolveResult:
    """Minimum-disagreement order with both classes forced non-empty.

    Solves one contracted network per ordered alternative pair (x, y) with
    two forcing arcs source -> x and y -> sink of weight L, pinning x to
    the top and y to the bottom class, and keeps the best result. Ties are
    broken by the first (x, y) in index order that attains the optimum.
    """
    if p.m < 2:
        raise ValueError("a non-empty split needs at least two alternatives")
    _check_voters_complete(p)
    stats = pair_stats(p)
    big_l = choose_big_l(stats)
    base_net, layout = build_contracted_network(stats)
    base_arcs = base_net.arcs
    alt = layout.node_of_alternative
    best: tuple[int, DichotomousOrder] | None = None
    for x in range(p.m):
        for y in range(p.m):
            if x == y:
                continue
            arcs = base_arcs + ((layout.source, alt[x], big_l), (alt[y], layout.sink, big_l))
            net = FlowNetwork(base_net.node_count, layout.source, layout.sink, arcs)
            cut = min_cut(net)
            order = extract_order(cut, layout, p.universe)
            if x not in order.top or y not in order.bottom:
                raise CutConsistencyError(
                    f"forcing arcs for ({p.universe.names[x]}, {p.universe.names[y]}) "
                    "were crossed by a minimum cut"
                )
            if best is None or cut.capacity < best[0]:
                best = (cut.capacity, order)
    capacity, order = best
    disagreements = score(p, order)
    per_pair = _pair_breakdown(stats, order) if breakdown else None
    return SolveResult(order=order, disagreements=disagreements, cut_capacity=capacity, per_pair=per_pair)
