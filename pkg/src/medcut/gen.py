"""Seeded random instance generators for tests and benchmarks.

Randomness comes from an explicitly specified 64-bit mixing generator
(SplitMix64) rather than the standard library, so that a seed reproduces
the exact same profile in any implementation of the recurrence, in any
language. All draws are documented in terms of that single stream.
"""

from __future__ import annotations

from .relations import AlternativeSet, BinaryRelation, Profile, relation_from_tiers

__all__ = ["MODELS", "SplitMix64", "alternative_names", "gen_profile"]

MODELS = ("dichotomous", "weak_order", "complete_relation", "reflexive_relation")

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 generator, defined by its recurrence (all mod 2**64):

        state += 0x9E3779B97F4A7C15
        z = state
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
        z = (z ^ (z >> 27)) * 0x94D049BB133111EB
        output = z ^ (z >> 31)
    """

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_uint64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Next draw reduced mod ``bound`` (bias is negligible for small bounds)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_uint64() % bound


def alternative_names(m: int) -> tuple[str, ...]:
    """Deterministic spreadsheet-style names: a..z, aa, ab, ..."""
    names = []
    for i in range(m):
        k = i
        s = ""
        while True:
            s = chr(ord("a") + k % 26) + s
            k = k // 26 - 1
            if k < 0:
                break
        names.append(s)
    return tuple(names)


def _tiers_from_rank(rank: list[int], m: int) -> list[list[int]]:
    tiers: list[list[int]] = [[] for _ in range(max(rank) + 1)]
    for a in range(m):
        tiers[rank[a]].append(a)
    return tiers


def _dichotomous_voter(universe: AlternativeSet, rng: SplitMix64) -> BinaryRelation:
    # One coin per alternative, in index order: 1 = bottom class.
    m = universe.m
    rank = [rng.below(2) for _ in range(m)]
    tiers = [[a for a in range(m) if rank[a] == 0], [a for a in range(m) if rank[a] == 1]]
    tiers = [t for t in tiers if t]
    return relation_from_tiers(universe, tiers)


def _weak_order_voter(universe: AlternativeSet, rng: SplitMix64) -> BinaryRelation:
    # Fisher-Yates shuffle of 0..m-1 (draws below(i+1) for i = m-1 .. 1),
    # then one coin per adjacent position: 1 starts a new tier.
    m = universe.m
    perm = list(range(m))
    for i in range(m - 1, 0, -1):
        j = rng.below(i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    rank = [0] * m
    tier = 0
    rank[perm[0]] = 0
    for pos in range(1, m):
        tier += rng.below(2)
        rank[perm[pos]] = tier
    return relation_from_tiers(universe, _tiers_from_rank(rank, m))


def _complete_relation_voter(universe: AlternativeSet, rng: SplitMix64) -> BinaryRelation:
    # One draw below(3) per unordered pair (a, b), a < b, in lexicographic
    # order: 0 = a over b, 1 = b over a, 2 = tie.
    m = universe.m
    pairs = []
    for a in range(m):
        for b in range(a + 1, m):
            c = rng.below(3)
            if c == 0:
                pairs.append((a, b))
            elif c == 1:
                pairs.append((b, a))
            else:
                pairs.append((a, b))
                pairs.append((b, a))
    return BinaryRelation.from_pairs(universe, pairs)


def _reflexive_relation_voter(universe: AlternativeSet, rng: SplitMix64) -> BinaryRelation:
    # One coin per ordered pair (a, b), a != b, row-major: 1 = contained.
    # May be incomplete.
    m = universe.m
    pairs = []
    for a in range(m):
        for b in range(m):
            if a != b and rng.below(2):
                pairs.append((a, b))
    return BinaryRelation.from_pairs(universe, pairs)


_VOTER_GENERATORS = {
    "dichotomous": _dichotomous_voter,
    "weak_order": _weak_order_voter,
    "complete_relation": _complete_relation_voter,
    "reflexive_relation": _reflexive_relation_voter,
}


def gen_profile(m: int, n: int, model: str, seed: int) -> Profile:
    """Deterministic random profile of ``n`` voters over ``m`` alternatives.

    Models: ``dichotomous`` draws a uniform ordered bipartition per voter;
    ``weak_order`` a random ranking with a random tie pattern;
    ``complete_relation`` an independent uniform choice among a-over-b,
    b-over-a, and tie per pair; ``reflexive_relation`` an independent fair
    coin per ordered pair (so voters may be incomplete). The first three
    always produce complete voters.

    Voters draw sequentially from one SplitMix64 stream seeded with
    ``seed``, so equal arguments reproduce the profile exactly.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if n < 1:
        raise ValueError("n must be at least 1")
    try:
        gen_voter = _VOTER_GENERATORS[model]
    except KeyError:
        raise ValueError(f"unknown model {model!r}; expected one of {MODELS}") from None
    universe = AlternativeSet(alternative_names(m))
    rng = SplitMix64(seed)
    return Profile(universe, [gen_voter(universe, rng) for _ in range(n)])
