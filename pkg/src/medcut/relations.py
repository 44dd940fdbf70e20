"""Alternatives, voter relations, profiles, and disagreement scoring.

The central objects are reflexive binary relations over a fixed universe of
alternatives, stored as m-by-m boolean incidence matrices, and two-tier
orders (an ordered partition of the alternatives into a top and a bottom
class). Disagreement between two relations is the number of ordered pairs
contained in exactly one of them; all scores are exact nonnegative integers.

Everything here is immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "AlternativeSet",
    "BinaryRelation",
    "Profile",
    "PairStats",
    "DichotomousOrder",
    "UniverseMismatchError",
    "IncompleteRelationError",
    "relation_from_tiers",
    "tiers_of",
    "is_complete",
    "distance",
    "pair_stats",
    "score",
    "score_closed_form",
]


class UniverseMismatchError(ValueError):
    """Objects built over different alternative universes were combined."""


class IncompleteRelationError(ValueError):
    """An operation that requires complete relations met an incomparable pair.

    Attributes
    ----------
    voter : int or None
        Index of the offending voter, when known.
    pair : tuple or None
        The incomparable pair, as names when a universe is at hand,
        otherwise as indices.
    """

    def __init__(self, message: str, *, voter: int | None = None, pair=None):
        super().__init__(message)
        self.voter = voter
        self.pair = pair


@dataclass(frozen=True)
class AlternativeSet:
    """Ordered universe of distinct, non-empty alternative names.

    Alternatives are addressed internally by index 0..m-1 in declaration
    order; the name/index mapping is a bijection.
    """

    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("an alternative set needs at least one alternative")
        for name in names:
            if not isinstance(name, str) or not name:
                raise ValueError(f"alternative names must be non-empty strings, got {name!r}")
        if len(set(names)) != len(names):
            dup = next(n for i, n in enumerate(names) if n in names[:i])
            raise ValueError(f"duplicate alternative name {dup!r}")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    @property
    def m(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown alternative {name!r}") from None

    def __len__(self) -> int:
        return len(self.names)


class BinaryRelation:
    """A reflexive binary relation over an :class:`AlternativeSet`.

    ``contains[a, b]`` is True iff the ordered pair (a, b) is in the
    relation. Reflexivity (a full diagonal) is enforced at construction;
    nothing else is. Completeness is a queryable property, not an
    invariant (see :func:`is_complete`).
    """

    __slots__ = ("universe", "contains")

    def __init__(self, universe: AlternativeSet, contains):
        matrix = np.array(contains, dtype=bool, copy=True)
        m = universe.m
        if matrix.shape != (m, m):
            raise ValueError(f"incidence matrix must be {m}x{m}, got {matrix.shape}")
        if not matrix.diagonal().all():
            a = int(np.flatnonzero(~matrix.diagonal())[0])
            raise ValueError(f"relation is not reflexive: missing ({universe.names[a]}, {universe.names[a]})")
        matrix.setflags(write=False)
        self.universe = universe
        self.contains = matrix

    @classmethod
    def from_pairs(cls, universe: AlternativeSet, pairs: Iterable[tuple[int, int]]) -> "BinaryRelation":
        """Build a relation from off-diagonal index pairs; the diagonal is implied."""
        m = universe.m
        matrix = np.eye(m, dtype=bool)
        for a, b in pairs:
            if not (0 <= a < m and 0 <= b < m):
                raise ValueError(f"alternative index out of range in pair ({a}, {b})")
            matrix[a, b] = True
        return cls(universe, matrix)

    def pairs(self) -> list[tuple[int, int]]:
        """Off-diagonal contained pairs as index tuples, row-major."""
        out = []
        c = self.contains
        for a, b in zip(*np.nonzero(c)):
            if a != b:
                out.append((int(a), int(b)))
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryRelation):
            return NotImplemented
        return self.universe == other.universe and np.array_equal(self.contains, other.contains)

    __hash__ = None

    def __repr__(self) -> str:
        return f"BinaryRelation(m={self.universe.m}, pairs={len(self.pairs())})"


class Profile:
    """A sequence of voter relations sharing one alternative universe."""

    __slots__ = ("universe", "voters")

    def __init__(self, universe: AlternativeSet, voters: Iterable[BinaryRelation]):
        voters = tuple(voters)
        if not voters:
            raise ValueError("a profile needs at least one voter")
        for i, r in enumerate(voters):
            if r.universe != universe:
                raise UniverseMismatchError(f"voter {i} is over a different alternative set")
        self.universe = universe
        self.voters = voters

    @property
    def n(self) -> int:
        return len(self.voters)

    @property
    def m(self) -> int:
        return self.universe.m

    def __eq__(self, other) -> bool:
        if not isinstance(other, Profile):
            return NotImplemented
        return self.universe == other.universe and self.voters == other.voters

    __hash__ = None

    def __repr__(self) -> str:
        return f"Profile(m={self.m}, n={self.n})"


@dataclass(frozen=True)
class PairStats:
    """Per-ordered-pair voter counts summarizing a profile.

    ``n_strict[a, b]`` counts voters with (a, b) but not (b, a);
    ``e_tied[a, b]`` counts voters with both; ``i_incomp[a, b]`` counts
    voters with neither. For a != b the three counts plus ``n_strict[b, a]``
    always sum to ``n_voters``; diagonals are zero by convention.
    """

    n_strict: np.ndarray
    e_tied: np.ndarray
    i_incomp: np.ndarray
    n_voters: int

    def __post_init__(self):
        n_strict = np.asarray(self.n_strict, dtype=np.int64)
        e_tied = np.asarray(self.e_tied, dtype=np.int64)
        i_incomp = np.asarray(self.i_incomp, dtype=np.int64)
        m = n_strict.shape[0]
        for name, mat in (("n_strict", n_strict), ("e_tied", e_tied), ("i_incomp", i_incomp)):
            if mat.shape != (m, m):
                raise ValueError(f"{name} must be square and match n_strict, got {mat.shape}")
            if (mat < 0).any():
                raise ValueError(f"{name} has a negative entry")
            if mat.diagonal().any():
                raise ValueError(f"{name} must have a zero diagonal")
            mat.setflags(write=False)
        if not np.array_equal(e_tied, e_tied.T):
            raise ValueError("e_tied must be symmetric")
        if not np.array_equal(i_incomp, i_incomp.T):
            raise ValueError("i_incomp must be symmetric")
        total = n_strict + n_strict.T + e_tied + i_incomp
        off = ~np.eye(m, dtype=bool)
        if not (total[off] == self.n_voters).all():
            raise ValueError("pair counts do not sum to the number of voters")
        object.__setattr__(self, "n_strict", n_strict)
        object.__setattr__(self, "e_tied", e_tied)
        object.__setattr__(self, "i_incomp", i_incomp)

    @property
    def m(self) -> int:
        return self.n_strict.shape[0]

    def is_complete(self) -> bool:
        """True iff no voter left any pair incomparable."""
        return not self.i_incomp.any()

    def first_incomparable_pair(self) -> tuple[int, int] | None:
        """Lowest-index pair (a, b), a < b, with a nonzero incomparability count."""
        idx = np.argwhere(np.triu(self.i_incomp, 1) > 0)
        if len(idx) == 0:
            return None
        a, b = idx[0]
        return int(a), int(b)


class DichotomousOrder:
    """An ordered 2-partition (top, bottom) of the alternatives.

    Either class may be empty; a one-class order is universal indifference.
    Viewed as a binary relation it contains every (a, a), both directions
    within a class, and (a, b) only, for a in top and b in bottom.
    """

    __slots__ = ("universe", "top", "bottom")

    def __init__(self, universe: AlternativeSet, top: Iterable[int], bottom: Iterable[int] | None = None):
        m = universe.m
        top = frozenset(int(a) for a in top)
        for a in top:
            if not 0 <= a < m:
                raise ValueError(f"alternative index {a} out of range")
        if bottom is None:
            bottom = frozenset(range(m)) - top
        else:
            bottom = frozenset(int(a) for a in bottom)
            if top & bottom:
                raise ValueError(f"top and bottom overlap on index {min(top & bottom)}")
            if top | bottom != frozenset(range(m)):
                missing = min(frozenset(range(m)) - (top | bottom))
                raise ValueError(f"alternative {universe.names[missing]!r} is in neither class")
        self.universe = universe
        self.top = top
        self.bottom = bottom

    def as_relation(self) -> BinaryRelation:
        rank = np.ones(self.universe.m, dtype=np.int8)
        rank[list(self.top)] = 0
        return BinaryRelation(self.universe, rank[:, None] <= rank[None, :])

    def top_names(self) -> list[str]:
        """Top-class names in universe declaration order."""
        return [n for i, n in enumerate(self.universe.names) if i in self.top]

    def bottom_names(self) -> list[str]:
        return [n for i, n in enumerate(self.universe.names) if i in self.bottom]

    def __eq__(self, other) -> bool:
        if not isinstance(other, DichotomousOrder):
            return NotImplemented
        return self.universe == other.universe and self.top == other.top

    __hash__ = None

    def __repr__(self) -> str:
        return f"DichotomousOrder(top={self.top_names()}, bottom={self.bottom_names()})"


def relation_from_tiers(universe: AlternativeSet, tiers: Sequence[Iterable[int]]) -> BinaryRelation:
    """Build the weak order given by an ordered partition into tiers.

    Alternatives in the same tier are mutually related, alternatives in an
    earlier tier relate one-way to those in later tiers, and the diagonal
    is always set. Tiers must be non-empty, disjoint, and cover the
    universe.
    """
    m = universe.m
    rank = np.full(m, -1, dtype=np.int32)
    for t, tier in enumerate(tiers):
        tier = list(tier)
        if not tier:
            raise ValueError(f"tier {t} is empty")
        for a in tier:
            a = int(a)
            if not 0 <= a < m:
                raise ValueError(f"unknown alternative index {a}")
            if rank[a] >= 0:
                raise ValueError(f"alternative {universe.names[a]!r} appears in more than one tier")
            rank[a] = t
    if (rank < 0).any():
        a = int(np.flatnonzero(rank < 0)[0])
        raise ValueError(f"alternative {universe.names[a]!r} is missing from the tiers")
    return BinaryRelation(universe, rank[:, None] <= rank[None, :])


def tiers_of(r: BinaryRelation) -> list[list[int]] | None:
    """Decompose a relation into ordered tiers, or None if it is not a weak order.

    The candidate rank of an alternative is the number of alternatives
    strictly preferred to it; the decomposition is accepted only if
    rebuilding a relation from it reproduces ``r`` exactly.
    """
    c = r.contains
    strict = c & ~c.T
    rank = strict.sum(axis=0)
    levels = sorted(set(int(v) for v in rank))
    tiers = [[int(a) for a in np.flatnonzero(rank == lv)] for lv in levels]
    if relation_from_tiers(r.universe, tiers) == r:
        return tiers
    return None


def is_complete(r: BinaryRelation) -> bool:
    """True iff every pair a != b is related in at least one direction."""
    return bool(np.all(r.contains | r.contains.T))


def first_incomparable_pair(r: BinaryRelation) -> tuple[int, int] | None:
    """Lowest-index incomparable pair (a, b), a < b, or None if complete."""
    missing = ~(r.contains | r.contains.T)
    idx = np.argwhere(np.triu(missing, 1))
    if len(idx) == 0:
        return None
    a, b = idx[0]
    return int(a), int(b)


def distance(r: BinaryRelation, s: BinaryRelation) -> int:
    """Number of ordered pairs contained in exactly one of the two relations."""
    if r.universe != s.universe:
        raise UniverseMismatchError("relations are over different alternative sets")
    return int(np.count_nonzero(r.contains != s.contains))


def pair_stats(p: Profile) -> PairStats:
    """Count strict, tied, and incomparable voters for every ordered pair."""
    m = p.m
    n_strict = np.zeros((m, m), dtype=np.int64)
    e_tied = np.zeros((m, m), dtype=np.int64)
    i_incomp = np.zeros((m, m), dtype=np.int64)
    for r in p.voters:
        c = r.contains
        ct = c.T
        n_strict += c & ~ct
        e_tied += c & ct
        i_incomp += ~(c | ct)
    np.fill_diagonal(e_tied, 0)
    return PairStats(n_strict, e_tied, i_incomp, p.n)


def score(p: Profile, o: DichotomousOrder) -> int:
    """Total disagreement of the profile with a two-tier order.

    This is the ground-truth objective: the sum over voters of
    :func:`distance` to the order's induced relation. Valid for any
    reflexive voters, complete or not.
    """
    if p.universe != o.universe:
        raise UniverseMismatchError("profile and order are over different alternative sets")
    rel = o.as_relation().contains
    return sum(int(np.count_nonzero(r.contains != rel)) for r in p.voters)


def score_closed_form(stats: PairStats, o: DichotomousOrder) -> int:
    """Disagreement total computed from pair counts alone.

    For every strictly separated pair (a in top, b in bottom) the cost is
    2*N(b,a) + E(b,a); for every same-class unordered pair it is
    N(a,b) + N(b,a), counted once. Equals :func:`score` exactly whenever
    the profile behind ``stats`` is complete; incomparabilities would be
    undercounted, so they are rejected.
    """
    if not stats.is_complete():
        a, b = stats.first_incomparable_pair()
        raise IncompleteRelationError(
            f"pair ({a}, {b}) is incomparable for {int(stats.i_incomp[a, b])} voter(s); "
            "the closed form only applies to complete profiles",
            pair=(a, b),
        )
    if stats.m != o.universe.m:
        raise UniverseMismatchError("pair stats and order have different sizes")
    n, e = stats.n_strict, stats.e_tied
    top = sorted(o.top)
    bot = sorted(o.bottom)
    strict = n[np.ix_(bot, top)].sum() * 2 + e[np.ix_(bot, top)].sum()
    tied = n[np.ix_(top, top)].sum() + n[np.ix_(bot, bot)].sum()
    return int(strict + tied)
