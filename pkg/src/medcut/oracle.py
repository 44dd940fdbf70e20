"""Exhaustive ground-truth solver for small instances.

Enumerates all 2^m ordered bipartitions and scores each one directly by
symmetric difference, so it stays valid for incomplete profiles that the
cut reduction rejects. Its value is its obviousness: everything else in
the package is checked against it.
"""

from __future__ import annotations

import numpy as np

from .relations import DichotomousOrder, Profile
from .reduction import SolveResult

__all__ = ["DEFAULT_CAP", "OracleCapacityError", "brute_force", "enumerate_scores"]

DEFAULT_CAP = 16


class OracleCapacityError(ValueError):
    """The instance exceeds the enumeration cap."""


def _check_cap(p: Profile, cap: int) -> None:
    if p.m > cap:
        raise OracleCapacityError(
            f"{p.m} alternatives exceed the enumeration cap of {cap} "
            "(2^m orders); use the cut-based solve() instead"
        )


def _rank_vector(assignment: int, m: int) -> np.ndarray:
    # Assignment k is read as an m-digit binary string, alternative 0 first
    # (most significant); a set bit puts the alternative in the bottom class.
    return np.fromiter(((assignment >> (m - 1 - j)) & 1 for j in range(m)), dtype=np.int8, count=m)


def enumerate_scores(p: Profile, cap: int = DEFAULT_CAP) -> list[tuple[DichotomousOrder, int]]:
    """Every two-tier order with its exact score, in canonical assignment order."""
    _check_cap(p, cap)
    m = p.m
    voters = np.stack([r.contains for r in p.voters])
    out = []
    for k in range(1 << m):
        rank = _rank_vector(k, m)
        rel = rank[:, None] <= rank[None, :]
        sc = int((voters != rel).sum())
        order = DichotomousOrder(p.universe, top=[j for j in range(m) if not rank[j]])
        out.append((order, sc))
    return out


def brute_force(p: Profile, cap: int = DEFAULT_CAP) -> SolveResult:
    """Minimum-score order by direct enumeration; lowest assignment wins ties."""
    _check_cap(p, cap)
    m = p.m
    voters = np.stack([r.contains for r in p.voters])
    best_k = 0
    best_score = None
    for k in range(1 << m):
        rank = _rank_vector(k, m)
        rel = rank[:, None] <= rank[None, :]
        sc = int((voters != rel).sum())
        if best_score is None or sc < best_score:
            best_score = sc
            best_k = k
    rank = _rank_vector(best_k, m)
    order = DichotomousOrder(p.universe, top=[j for j in range(m) if not rank[j]])
    return SolveResult(order=order, disagreements=best_score, cut_capacity=best_score)
