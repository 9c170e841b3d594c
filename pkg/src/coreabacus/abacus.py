"""Bead sets, s-abaci, conversions to/from partitions, and core predicates.

Bead sets are plain frozensets of non-negative integers; the abacus grid is a
derived view of a bead set, never the source of truth.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional

from .partitions import EMPTY, Partition, first_column_hooks

BeadSet = frozenset  # frozenset[int]


class RunnerMismatchError(ValueError):
    """Two abaci with different runner counts were combined or compared."""


@dataclass(frozen=True)
class Abacus:
    """An s-runner grid view of a bead set.

    Position (i, j) with runner 0 <= i <= runners-1 and row j >= 0 carries the
    bead value i + j*runners.
    """

    runners: int
    positions: frozenset  # frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.runners < 1:
            raise ValueError(f"runner count must be positive, got {self.runners}")
        object.__setattr__(self, "positions", frozenset(self.positions))
        for i, j in self.positions:
            if not (0 <= i < self.runners and j >= 0):
                raise ValueError(f"position {(i, j)} outside {self.runners}-runner grid")

    def bead_values(self) -> frozenset:
        return from_abacus(self)

    def max_row(self) -> int:
        """Largest occupied row; -1 when empty."""
        return max((j for _, j in self.positions), default=-1)


@dataclass(frozen=True)
class AxisTheta:
    """Half-integer mirror axis of a self-conjugate bead set, stored doubled."""

    twice_theta: int

    def __post_init__(self):
        if self.twice_theta % 2 == 0:
            raise ValueError("theta must be a half-integer")

    @property
    def theta(self) -> float:
        return self.twice_theta / 2


def beadset(values: Iterable[int]) -> BeadSet:
    """Validated bead set: a finite set of non-negative integers."""
    beads = frozenset(int(v) for v in values)
    if any(v < 0 for v in beads):
        raise ValueError("bead positions must be non-negative")
    return beads


def partition_to_minimal_beadset(p: Partition) -> BeadSet:
    """Minimal bead set of a partition: its first-column hook lengths."""
    return first_column_hooks(p)


def beadset_to_partition(x: BeadSet) -> Partition:
    """Partition whose part for bead b is the number of spacers below b."""
    parts = [b - k for k, b in enumerate(sorted(x))]
    return Partition(p for p in reversed(parts) if p > 0)


def normalize(x: BeadSet) -> BeadSet:
    """Minimal form: strip the solid prefix {0..k-1} and shift down by k."""
    k = 0
    while k in x:
        k += 1
    return frozenset(b - k for b in x if b >= k)


def to_abacus(x: BeadSet, s: int) -> Abacus:
    """Arrange a bead set on s runners: bead b sits at (b mod s, b div s)."""
    if s < 1:
        raise ValueError(f"runner count must be positive, got {s}")
    return Abacus(s, frozenset((b % s, b // s) for b in x))


def from_abacus(a: Abacus) -> BeadSet:
    return frozenset(i + j * a.runners for i, j in a.positions)


def is_sub_abacus(inner: Abacus, outer: Abacus) -> bool:
    if inner.runners != outer.runners:
        raise RunnerMismatchError(
            f"cannot compare {inner.runners}-runner and {outer.runners}-runner abaci"
        )
    return inner.positions <= outer.positions


def is_core_abacus(a: Abacus) -> bool:
    """True iff every runner is bottom-justified (no spacer below a bead)."""
    return all(j == 0 or (i, j - 1) in a.positions for i, j in a.positions)


def is_t_core(p: Partition, t: int) -> bool:
    """True iff p has no hook of length t (abacus criterion)."""
    return is_core_abacus(to_abacus(partition_to_minimal_beadset(p), t))


def is_simultaneous_core(p: Partition, ts: Iterable[int]) -> bool:
    moduli = set(ts)
    if not moduli:
        raise ValueError("at least one modulus is required")
    return all(is_t_core(p, t) for t in moduli)


def self_conjugate_axis_check(x: BeadSet) -> Optional[AxisTheta]:
    """Mirror axis theta with beads and spacers exchanged, if one exists.

    Searches half-integers in (-1/2, max(x)+1/2]; beyond the largest bead all
    positions are spacers, so no axis can lie there.  Agrees with the
    partition-level self-conjugacy predicate.
    """
    top = max(x, default=0)
    for twice in range(-1, 2 * top + 2, 2):
        if _axis_holds(x, twice):
            return AxisTheta(twice)
    return None


def _axis_holds(x: BeadSet, twice_theta: int) -> bool:
    hi = max(max(x, default=-1), twice_theta)
    for p in range(hi + 1):
        q = twice_theta - p
        if q < 0:
            if p in x:  # bead beyond the axis range has no spacer to mirror
                return False
        elif (p in x) == (q in x):
            return False
    return True


def render_abacus(a: Abacus, rows: int | None = None) -> str:
    """ASCII grid, one line per row with the largest row first.

    Beads render as [n], spacers as blank-padded n; values are right-aligned to
    the width of the largest value shown.  Output is byte-stable for golden
    tests.
    """
    if rows is None:
        rows = max(a.max_row() + 1, 1)
    if rows < 1:
        raise ValueError("at least one row is required")
    if a.max_row() >= rows:
        raise ValueError(f"abacus occupies row {a.max_row()}, beyond {rows} rows")
    width = len(str(a.runners * rows - 1))
    lines = []
    for j in range(rows - 1, -1, -1):
        cells = []
        for i in range(a.runners):
            value = str(i + j * a.runners).rjust(width)
            cells.append(f"[{value}]" if (i, j) in a.positions else f" {value} ")
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines)


def beadset_to_json(x: BeadSet) -> str:
    """Sorted ascending JSON array of bead values."""
    return json.dumps(sorted(x))
