"""Closed forms, recurrences, and the claim-checking harness.

Every identity is checked with exact integer arithmetic; a formula producing a
non-integer on valid input is a hard failure, never a rounding event.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterator

from . import partitions as pt
from .abacus import (
    beadset_to_partition,
    from_abacus,
    is_sub_abacus,
    partition_to_minimal_beadset,
    to_abacus,
)
from .constructions import (
    build_e_minus,
    build_e_plus,
    build_l,
    e_minus_from_coordinates,
    e_plus_from_coordinates,
)
from .enumeration import (
    GuardRailError,
    count_st_cores,
    enumerate_multi_cores,
    enumerate_st_cores,
    filter_distinct,
    filter_self_conjugate,
    maximal_st_core,
    st_core_weight_profile,
)
from .partitions import Partition

# Above this family size the self-conjugate claims fall back to the staircase
# oracle instead of filtering a multi-million member enumeration.
FILTER_ROUTE_LIMIT = 100_000


# ---------------------------------------------------------------------------
# closed forms and recurrences


def fib_count(s: int) -> int:
    """Number of (s, s+1)-cores with distinct parts: Fibonacci with seeds 1, 2."""
    if s < 1:
        raise ValueError(f"s must be at least 1, got {s}")
    a, b = 1, 2  # values at s = 1 and s = 2
    for _ in range(s - 1):
        a, b = b, a + b
    return a


def straub_minus(m: int, s: int) -> int:
    """Count of (s, ms-1)-cores with distinct parts: seeds 1, m."""
    return _two_term(m, s, 1, m)


def straub_plus(m: int, s: int) -> int:
    """Count of (s, ms+1)-cores with distinct parts: seeds 1, m+1."""
    return _two_term(m, s, 1, m + 1)


def _two_term(m: int, s: int, seed1: int, seed2: int) -> int:
    if m < 1 or s < 1:
        raise ValueError(f"m and s must be at least 1, got ({m}, {s})")
    a, b = seed1, seed2
    for _ in range(s - 1):
        a, b = b, b + m * a
    return a


def middle_identity_check(m: int, s: int) -> bool:
    """Mixed recurrence tying the minus counts to the plus counts (s >= 3)."""
    if s < 3:
        raise ValueError(f"s must be at least 3, got {s}")
    return straub_minus(m, s) == straub_plus(m, s - 1) + (m - 1) * straub_plus(m, s - 2)


def max_weight_formula(s: int, t: int) -> int:
    """Weight of the unique maximal (s,t)-core: (s^2-1)(t^2-1)/24."""
    if s < 1 or t < 1:
        raise ValueError(f"moduli must be positive, got ({s}, {t})")
    if math.gcd(s, t) != 1:
        raise ValueError(f"moduli must be coprime, got ({s}, {t})")
    num = (s * s - 1) * (t * t - 1)
    if num % 24:
        raise ArithmeticError(f"({s}^2-1)({t}^2-1) = {num} is not divisible by 24")
    return num // 24


def longest_weight_formula(s: int, m: int) -> int:
    """Weight of the longest (s, ms-1, ms+1)-core, cased on the parity of s."""
    if s < 1 or m < 1:
        raise ValueError(f"s and m must be at least 1, got ({s}, {m})")
    if s % 2:  # s = 2t - 1
        t = (s + 1) // 2
        num = m * m * t * (t - 1) * (t * t - t + 1)
        if num % 6:
            raise ArithmeticError(f"odd-case numerator {num} not divisible by 6")
        return num // 6
    t = (s + 2) // 2  # s = 2t - 2
    num = m * m * (t - 1) ** 2 * (t * t - 2 * t + 3) - 3 * m * (t - 1) ** 2
    if num % 6:
        raise ArithmeticError(f"even-case numerator {num} not divisible by 6")
    return num // 6


def self_conjugate_counts(kind: str, m: int, s: int) -> int:
    """Piecewise counts of self-conjugate distinct-part cores.

    kind selects the family: "plain" for (s, s+1), "minus" for (s, ms-1),
    "plus" for (s, ms+1); m is ignored for "plain".
    """
    if s < 1 or m < 1:
        raise ValueError(f"s and m must be at least 1, got ({s}, {m})")
    alpha = s // 2
    if kind == "plain":
        return 1 if s == 1 else alpha + 1
    if kind == "minus":
        if s == 1:
            return 1
        return m * alpha if s % 2 == 0 else alpha + 1
    if kind == "plus":
        if s == 1:
            return 1
        return m * alpha + 1 if s % 2 == 0 else alpha + 1
    raise ValueError(f"unknown kind {kind!r}")


def staircase_core_count(moduli) -> int:
    """Brute-force count of staircases that are cores for every modulus.

    Checks hook multisets directly, so it is independent of both the piecewise
    formulas and the abacus fast path.  Staircase membership is down-closed in
    k, so the scan stops at the first failure (bounded by the largest modulus
    as a safety net).
    """
    moduli = sorted(set(moduli))
    if any(t < 1 for t in moduli):
        raise ValueError(f"moduli must be positive, got {moduli}")
    if all(t % 2 == 0 for t in moduli):
        raise ValueError(f"all moduli even: infinitely many staircase cores {moduli}")
    count = 0
    for k in range(max(moduli) + 2):
        hooks = set(pt.hook_length_multiset(pt.staircase(k)))
        if hooks & set(moduli):
            break
        count += 1
    return count


def corollary3_check(s: int, m: int) -> bool:
    """For even s: does m^2 divide the brute-forced maximal triple-core weight?"""
    if s % 2:
        raise ValueError(f"s must be even, got {s}")
    family = enumerate_multi_cores(_triple_moduli(s, m))
    return family.max_weight() % (m * m) == 0


# ---------------------------------------------------------------------------
# verification harness


@dataclass
class Cell:
    params: dict
    expected: object
    observed: object
    passed: bool
    status: str = ""
    note: str = ""


@dataclass
class VerificationReport:
    claim: str
    grid: dict
    cells: list[Cell] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.cells)

    def to_json(self) -> str:
        return json.dumps(
            {
                "claim": self.claim,
                "grid": {k: list(v) for k, v in self.grid.items()},
                "cells": [
                    {
                        "params": c.params,
                        "expected": c.expected,
                        "observed": c.observed,
                        "pass": c.passed,
                        **({"status": c.status} if c.status else {}),
                        **({"note": c.note} if c.note else {}),
                    }
                    for c in self.cells
                ],
                "elapsed_ms": self.elapsed_ms,
            },
            indent=2,
        )


def claim_guardrails() -> dict:
    """Per-claim parameter bounds, loaded from the versioned config file."""
    text = resources.files("coreabacus.data").joinpath("guardrails.json").read_text()
    return {claim: {k: tuple(v) for k, v in rails.items()} for claim, rails in json.loads(text).items()}


CLAIM_IDS = (
    "xiong",
    "straub-minus",
    "straub-plus",
    "middle",
    "olsson-stanton",
    "sylvester",
    "emax",
    "longest-m2",
    "row-structure",
    "two-conj",
    "fstar",
    "e-minus-star",
    "e-plus-star",
    "berger",
)


def verify_claim(claim: str, grid: dict | None = None) -> VerificationReport:
    """Compare a formula or structural claim against enumeration, cell by cell."""
    rails = claim_guardrails()
    if claim not in rails:
        raise ValueError(f"unknown claim {claim!r}; expected one of {CLAIM_IDS}")
    resolved = dict(rails[claim])
    if grid:
        for key, (lo, hi) in grid.items():
            if key not in resolved:
                raise GuardRailError(f"claim {claim!r} has no parameter {key!r}")
            rail_lo, rail_hi = resolved[key]
            if lo < rail_lo or hi > rail_hi:
                raise GuardRailError(
                    f"grid {key}={lo}..{hi} breaches guard rail {rail_lo}..{rail_hi}; "
                    f"try {key}={max(lo, rail_lo)}..{min(hi, rail_hi)}"
                )
            resolved[key] = (lo, hi)
    start = time.perf_counter()
    cells = list(_CLAIMS[claim](resolved))
    elapsed = (time.perf_counter() - start) * 1000
    return VerificationReport(claim=claim, grid=resolved, cells=cells, elapsed_ms=elapsed)


def _span(grid: dict, key: str) -> range:
    lo, hi = grid[key]
    return range(lo, hi + 1)


def _claim_xiong(grid: dict) -> Iterator[Cell]:
    for s in _span(grid, "s"):
        expected = fib_count(s)
        observed = len(filter_distinct(enumerate_st_cores(s, s + 1)))
        yield Cell({"s": s}, expected, observed, expected == observed)


def _claim_straub(sign: int, grid: dict) -> Iterator[Cell]:
    formula = straub_minus if sign < 0 else straub_plus
    for m in _span(grid, "m"):
        for s in _span(grid, "s"):
            t = m * s + sign
            if t < 1:
                yield Cell({"m": m, "s": s}, None, None, True, status="UNTESTED",
                           note=f"degenerate modulus {t}")
                continue
            expected = formula(m, s)
            observed = len(filter_distinct(enumerate_st_cores(s, t)))
            yield Cell({"m": m, "s": s}, expected, observed, expected == observed)


def _claim_middle(grid: dict) -> Iterator[Cell]:
    for m in _span(grid, "m"):
        for s in _span(grid, "s"):
            expected = straub_minus(m, s)
            observed = straub_plus(m, s - 1) + (m - 1) * straub_plus(m, s - 2)
            yield Cell({"m": m, "s": s}, expected, observed, expected == observed)


def _coprime_pairs(t_hi: int) -> Iterator[tuple[int, int]]:
    for t in range(2, t_hi + 1):
        for s in range(2, t):
            if math.gcd(s, t) == 1:
                yield s, t


def _claim_olsson_stanton(grid: dict) -> Iterator[Cell]:
    for s, t in _coprime_pairs(grid["t"][1]):
        expected = max_weight_formula(s, t)
        best, hits = st_core_weight_profile(s, t)
        yield Cell(
            {"s": s, "t": t},
            {"max_weight": expected, "attained_by": 1},
            {"max_weight": best, "attained_by": hits},
            best == expected and hits == 1,
        )


def _claim_sylvester(grid: dict) -> Iterator[Cell]:
    for s, t in _coprime_pairs(grid["t"][1]):
        expected = s * t - s - t
        observed = max(
            max(partition_to_minimal_beadset(p), default=0)
            for p in enumerate_st_cores(s, t).members
        )
        yield Cell({"s": s, "t": t}, expected, observed, expected == observed)


def _claim_emax(grid: dict) -> Iterator[Cell]:
    for m in _span(grid, "m"):
        for s in _span(grid, "s"):
            for sign, built, coords in (
                (-1, build_e_minus(s, m), e_minus_from_coordinates(s, m)),
                (+1, build_e_plus(s, m), e_plus_from_coordinates(s, m)),
            ):
                params = {"m": m, "s": s, "sign": sign}
                t = m * s + sign
                if t < 1:
                    yield Cell(params, None, None, True, status="UNTESTED",
                               note=f"degenerate modulus {t}")
                    continue
                part = beadset_to_partition(from_abacus(built))
                expected = max_weight_formula(s, t)
                observed = part.weight
                problems = []
                if built != coords:
                    problems.append("wedge and coordinate routes disagree")
                if set(pt.hook_length_multiset(part)) & {s, t}:
                    problems.append(f"not an ({s},{t})-core by the hook oracle")
                if part != maximal_st_core(s, t):
                    problems.append("differs from the full-gap-set core")
                frob = s * t - s - t
                if frob >= 0 and max(from_abacus(built), default=-1) != frob:
                    problems.append("largest bead misses the Frobenius number")
                passed = observed == expected and not problems
                yield Cell(params, expected, observed, passed, note="; ".join(problems))


def _claim_longest_m2(grid: dict) -> Iterator[Cell]:
    for m in _span(grid, "m"):
        for s in _span(grid, "s"):
            expected = longest_weight_formula(s, m)
            observed = beadset_to_partition(from_abacus(build_l(s, m))).weight
            yield Cell({"m": m, "s": s}, expected, observed, expected == observed)


def _claim_row_structure(grid: dict) -> Iterator[Cell]:
    for m in _span(grid, "m"):
        for s in _span(grid, "s"):
            for sign, envelope in ((-1, build_e_minus(s, m)), (+1, build_e_plus(s, m))):
                params = {"m": m, "s": s, "sign": sign}
                t = m * s + sign
                if t < 1:
                    yield Cell(params, None, None, True, status="UNTESTED",
                               note=f"degenerate modulus {t}")
                    continue
                violations = 0
                for p in filter_distinct(enumerate_st_cores(s, t)).members:
                    a = to_abacus(partition_to_minimal_beadset(p), m * s)
                    if a.max_row() > 0 or not is_sub_abacus(a, envelope):
                        violations += 1
                yield Cell(params, 0, violations, violations == 0)


def _claim_two_conj(grid: dict) -> Iterator[Cell]:
    mismatches = 0
    for p in pt.partitions_up_to(grid["w"][1]):
        if pt.is_two_core(p) != (pt.is_self_conjugate(p) and pt.has_distinct_parts(p)):
            mismatches += 1
    yield Cell({"w": grid["w"][1]}, 0, mismatches, mismatches == 0)


def _star_cell(params: dict, expected: int, s: int, t: int) -> Cell:
    if count_st_cores(s, t) <= FILTER_ROUTE_LIMIT:
        family = filter_distinct(filter_self_conjugate(enumerate_st_cores(s, t)))
        observed = len(family)
        note = "filtered-family route"
    else:
        observed = staircase_core_count((s, t))
        note = "staircase-oracle route (family too large to filter)"
    return Cell(params, expected, observed, expected == observed, note=note)


def _claim_fstar(grid: dict) -> Iterator[Cell]:
    for s in _span(grid, "s"):
        yield _star_cell({"s": s}, self_conjugate_counts("plain", 1, s), s, s + 1)


def _claim_e_star(sign: int, grid: dict) -> Iterator[Cell]:
    kind = "minus" if sign < 0 else "plus"
    for m in _span(grid, "m"):
        for s in _span(grid, "s"):
            t = m * s + sign
            if t < 1:
                yield Cell({"m": m, "s": s}, None, None, True, status="UNTESTED",
                           note=f"degenerate modulus {t}")
                continue
            expected = self_conjugate_counts(kind, m, s)
            yield _star_cell({"m": m, "s": s}, expected, s, t)


def _triple_moduli(s: int, m: int) -> tuple:
    return tuple(t for t in (s, m * s - 1, m * s + 1) if t >= 1)


def _claim_berger(grid: dict) -> Iterator[Cell]:
    for m in _span(grid, "m"):
        for s in _span(grid, "s"):
            params = {"m": m, "s": s}
            family = enumerate_multi_cores(_triple_moduli(s, m))
            expected = longest_weight_formula(s, m)
            best = family.max_weight()
            maximal = {p for p in family.members if p.weight == best}
            longest = beadset_to_partition(from_abacus(build_l(s, m)))
            conj_pair = {longest, pt.conjugate(longest)}
            supported = best == expected and maximal == conj_pair
            status = "SUPPORTED" if supported else f"REFUTED-AT({s},{m})"
            notes = [f"maximal members: {sorted(list(p.parts) for p in maximal)}"]
            if s % 2 == 0:
                notes.append(f"m^2 divides max weight: {best % (m * m) == 0}")
            yield Cell(
                params,
                {"max_weight": expected, "maximal_members": 2 if len(conj_pair) == 2 else 1},
                {"max_weight": best, "maximal_members": len(maximal)},
                supported,
                status=status,
                note="; ".join(notes),
            )


_CLAIMS = {
    "xiong": _claim_xiong,
    "straub-minus": lambda g: _claim_straub(-1, g),
    "straub-plus": lambda g: _claim_straub(+1, g),
    "middle": _claim_middle,
    "olsson-stanton": _claim_olsson_stanton,
    "sylvester": _claim_sylvester,
    "emax": _claim_emax,
    "longest-m2": _claim_longest_m2,
    "row-structure": _claim_row_structure,
    "two-conj": _claim_two_conj,
    "fstar": _claim_fstar,
    "e-minus-star": lambda g: _claim_e_star(-1, g),
    "e-plus-star": lambda g: _claim_e_star(+1, g),
    "berger": _claim_berger,
}
