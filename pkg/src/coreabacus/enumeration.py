"""Exhaustive generators for (s,t)-cores and multi-cores.

The fast route enumerates down-closed subsets of the gap poset of the
numerical semigroup <s, t>; each subset, read as a set of first-column hook
lengths, is the minimal bead set of one (s,t)-core.  The slow route generates
all partitions up to a weight bound and filters by hook multiset; it exists
only as an independent oracle for tests and verification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterable

from . import partitions as pt
from .abacus import beadset_to_partition, is_t_core
from .partitions import Partition

ORACLE_MAX_WEIGHT = 40  # guard rail for the brute-force route


class GuardRailError(ValueError):
    """A brute-force request exceeded its desk-scale guard rail."""


class AmbiguousLongestError(ValueError):
    """Several family members tie for the most parts."""

    def __init__(self, members):
        self.members = tuple(members)
        super().__init__(f"longest member is not unique: {sorted(m.parts for m in self.members)}")


@dataclass(frozen=True)
class GapPoset:
    """Non-representable values of <s, t> ordered by subtracting s or t."""

    s: int
    t: int
    gaps: tuple  # ascending
    covers: dict  # gap -> tuple of lower covers

    def __post_init__(self):
        assert len(self.gaps) == (self.s - 1) * (self.t - 1) // 2


@dataclass(frozen=True)
class CoreFamily:
    """A finite family of simultaneous cores, optionally filtered."""

    moduli: tuple
    members: tuple  # Partition, lexicographic part order
    distinct: bool = False
    self_conjugate: bool = False

    def __len__(self) -> int:
        return len(self.members)

    def max_weight(self) -> int:
        return max((m.weight for m in self.members), default=0)


def gap_poset(s: int, t: int) -> GapPoset:
    """Sieve the gaps of <s, t> up to the Frobenius number st - s - t."""
    _check_coprime(s, t)
    frob = s * t - s - t
    if frob < 0:  # s or t is 1: every value is representable
        return GapPoset(s, t, (), {})
    reachable = [False] * (frob + 1)
    reachable[0] = True
    for v in range(1, frob + 1):
        reachable[v] = (v >= s and reachable[v - s]) or (v >= t and reachable[v - t])
    gaps = tuple(v for v in range(frob + 1) if not reachable[v])
    gapset = set(gaps)
    covers = {g: tuple(x for x in (g - s, g - t) if x in gapset) for g in gaps}
    return GapPoset(s, t, gaps, covers)


def _ideal_masks(poset: GapPoset) -> list[int]:
    """Bitmasks of all down-closed gap subsets, gaps indexed in ascending order."""
    index = {g: i for i, g in enumerate(poset.gaps)}
    ideals = [0]
    for i, g in enumerate(poset.gaps):
        bit = 1 << i
        need = sum(1 << index[c] for c in poset.covers[g])
        ideals.extend([m | bit for m in ideals if m & need == need])
    return ideals


def _mask_beads(poset: GapPoset, mask: int) -> list[int]:
    return [g for i, g in enumerate(poset.gaps) if mask >> i & 1]


def _mask_weight(poset: GapPoset, mask: int) -> int:
    # weight = sum over sorted beads b_k of (b_k - k), the spacer count below b_k
    return sum(b - k for k, b in enumerate(_mask_beads(poset, mask)))


def count_st_cores(s: int, t: int) -> int:
    """Number of (s,t)-cores, without materializing partitions."""
    return len(_ideal_masks(gap_poset(s, t)))


def enumerate_st_cores(s: int, t: int) -> CoreFamily:
    """Every (s,t)-core exactly once, in lexicographic part order."""
    poset = gap_poset(s, t)
    members = [
        beadset_to_partition(frozenset(_mask_beads(poset, mask)))
        for mask in _ideal_masks(poset)
    ]
    members.sort(key=lambda p: p.parts)
    return CoreFamily(moduli=(s, t), members=tuple(members))


def st_core_weight_profile(s: int, t: int) -> tuple[int, int]:
    """(max weight, number of members attaining it) over all (s,t)-cores."""
    poset = gap_poset(s, t)
    best, hits = 0, 1  # the empty core has weight 0
    for mask in _ideal_masks(poset):
        if mask == 0:
            continue
        w = _mask_weight(poset, mask)
        if w > best:
            best, hits = w, 1
        elif w == best:
            hits += 1
    return best, hits


def maximal_st_core(s: int, t: int) -> Partition:
    """The core whose bead set is the full gap set of <s, t>."""
    poset = gap_poset(s, t)
    return beadset_to_partition(frozenset(poset.gaps))


def oracle_enumerate(moduli: Iterable[int], max_weight: int) -> CoreFamily:
    """Brute force: all partitions up to max_weight whose hooks avoid the moduli."""
    moduli = tuple(sorted(set(moduli)))
    if not moduli:
        raise ValueError("at least one modulus is required")
    if max_weight > ORACLE_MAX_WEIGHT:
        raise GuardRailError(
            f"oracle weight bound {max_weight} exceeds guard rail {ORACLE_MAX_WEIGHT}"
        )
    members = [
        p
        for p in pt.partitions_up_to(max_weight)
        if not set(moduli) & set(pt.hook_length_multiset(p))
    ]
    members.sort(key=lambda p: p.parts)
    return CoreFamily(moduli=moduli, members=tuple(members))


def filter_distinct(f: CoreFamily) -> CoreFamily:
    members = tuple(p for p in f.members if pt.has_distinct_parts(p))
    return replace(f, members=members, distinct=True)


def filter_self_conjugate(f: CoreFamily) -> CoreFamily:
    members = tuple(p for p in f.members if pt.is_self_conjugate(p))
    return replace(f, members=members, self_conjugate=True)


def enumerate_multi_cores(moduli: Iterable[int]) -> CoreFamily:
    """Enumerate a coprime pair, then filter by the remaining moduli."""
    moduli = tuple(sorted(set(moduli)))
    if any(t < 1 for t in moduli):
        raise ValueError(f"moduli must be positive, got {moduli}")
    pair = _coprime_pair(moduli)
    if pair is None:
        raise ValueError(f"no coprime pair in {moduli}; the family may be infinite")
    rest = [t for t in moduli if t not in pair]
    family = enumerate_st_cores(*pair)
    members = tuple(
        p for p in family.members if all(is_t_core(p, t) for t in rest)
    )
    return CoreFamily(moduli=moduli, members=members)


def longest_member(f: CoreFamily) -> Partition:
    """The unique member with the most parts; ties are surfaced loudly."""
    if not f.members:
        raise ValueError("family is empty")
    top = max(len(p) for p in f.members)
    best = [p for p in f.members if len(p) == top]
    if len(best) > 1:
        raise AmbiguousLongestError(best)
    return best[0]


def _coprime_pair(moduli: tuple) -> tuple | None:
    pairs = [
        (a, b)
        for i, a in enumerate(moduli)
        for b in moduli[i + 1 :]
        if math.gcd(a, b) == 1
    ]
    if not pairs:
        return None
    # smallest product keeps the base enumeration cheap
    return min(pairs, key=lambda ab: ab[0] * ab[1])


def _check_coprime(s: int, t: int) -> None:
    if s < 1 or t < 1:
        raise ValueError(f"moduli must be positive, got ({s}, {t})")
    if math.gcd(s, t) != 1:
        raise ValueError(f"moduli must be coprime, got ({s}, {t})")
