"""End-to-end acceptance checks.

Each test covers one headline claim at desk scale and prints a single
pass/fail line so the run log doubles as a checklist.  Expected values
are produced by the independent oracles in the library (brute-force
partition sweeps, hook multisets, order-ideal enumeration), never typed
in from the closed forms they are meant to confirm.
"""

import math
import random
from pathlib import Path

from coreabacus import abacus as ab
from coreabacus import constructions as cx
from coreabacus import enumeration as en
from coreabacus import partitions as pt
from coreabacus import verification as vf
from coreabacus.partitions import EMPTY, Partition

GOLDEN = Path(__file__).parent / "golden"


def _report(number: int, name: str, ok: bool) -> None:
    print(f"ACCEPTANCE {number} ({name}): {'PASS' if ok else 'FAIL'}")
    assert ok, f"acceptance criterion {number} ({name}) failed"


def test_acceptance_1_maximal_core_weight():
    ok = True
    for s in range(1, 13):
        for t in range(s + 1, 13):
            if math.gcd(s, t) != 1:
                continue
            weight, multiplicity = en.st_core_weight_profile(s, t)
            if weight != (s * s - 1) * (t * t - 1) // 24:
                ok = False
            if multiplicity != 1:
                ok = False
    _report(1, "unique maximal (s,t)-core weight", ok)


def test_acceptance_2_distinct_counts_fibonacci():
    ok = True
    for s in range(1, 11):
        family = en.filter_distinct(en.enumerate_st_cores(s, s + 1))
        if len(family) != vf.fib_count(s):
            ok = False
    _report(2, "distinct (s,s+1)-core counts", ok)


def test_acceptance_3_two_term_recurrences():
    ok = True
    for m in range(1, 4):
        for s in range(1, 7):
            minus = en.filter_distinct(en.enumerate_st_cores(s, m * s - 1)) \
                if m * s - 1 >= 1 else None
            if minus is not None and len(minus) != vf.straub_minus(m, s):
                ok = False
            plus = en.filter_distinct(en.enumerate_st_cores(s, m * s + 1))
            if len(plus) != vf.straub_plus(m, s):
                ok = False
        for s in range(3, 7):
            if not vf.middle_identity_check(m, s):
                ok = False
    _report(3, "two-term recurrences and middle identity", ok)


FIGURE_BEADS = {
    ("fig1_a5", "A", 5, 1): {1, 2, 3, 4, 7, 8, 9, 13, 14, 19},
    ("fig2_b05", "B0", 5, 1): {1, 2, 3, 4, 6, 7, 8, 11, 12, 16},
    ("fig3_b15", "B1", 5, 1): {1, 2, 3, 6, 7, 11},
    ("fig4_eminus35", "E-", 5, 3): {
        1, 2, 3, 4, 6, 7, 8, 9, 11, 12, 13, 16, 17, 18,
        21, 22, 23, 26, 27, 31, 32, 36, 37, 41, 46, 51,
    },
    ("fig5_eplus35", "E+", 5, 3): {
        1, 2, 3, 4, 6, 7, 8, 9, 11, 12, 13, 14, 17, 18, 19,
        22, 23, 24, 27, 28, 29, 33, 34, 38, 39, 43, 44, 49, 54, 59,
    },
    ("fig6_c05", "C0", 5, 1): {1, 2, 3, 4, 7, 8},
    ("fig7_c15", "C1", 5, 1): {1, 2, 3, 7},
    ("fig8_l35", "L", 5, 3): {
        1, 2, 3, 4, 6, 7, 8, 9, 11, 12, 13, 17, 18, 22, 23, 27,
    },
}


def test_acceptance_4_figure_goldens():
    ok = True
    for (stem, name, s, m), beads in FIGURE_BEADS.items():
        built = cx.build_named(name, s, m)
        if ab.from_abacus(built) != beads:
            ok = False
        rendered = ab.render_abacus(built, rows=4) + "\n"
        if rendered != (GOLDEN / f"{stem}.txt").read_text():
            ok = False
    _report(4, "figure bead sets and ASCII goldens", ok)


def test_acceptance_5_longest_core_weight():
    ok = True
    for s in range(1, 9):
        for m in range(1, 4):
            built = ab.beadset_to_partition(ab.from_abacus(cx.build_l(s, m)))
            if built.weight != vf.longest_weight_formula(s, m):
                ok = False
    if vf.longest_weight_formula(5, 3) != 63 or vf.longest_weight_formula(4, 2) != 12:
        ok = False
    _report(5, "parity-cased longest-core weight", ok)


def test_acceptance_6_strictly_most_parts():
    ok = True
    for s in range(1, 7):
        for m in range(1, 4):
            moduli = {t for t in (s, m * s - 1, m * s + 1) if t >= 1}
            family = en.enumerate_multi_cores(moduli)
            built = ab.beadset_to_partition(ab.from_abacus(cx.build_l(s, m)))
            if built not in set(family.members):
                ok = False
            if any(len(p) >= len(built) for p in family.members if p != built):
                ok = False
    _report(6, "longest core has strictly most parts", ok)


def test_acceptance_7_maximal_weight_probe():
    report = vf.verify_claim("berger", {"s": (1, 6), "m": (1, 3)})
    ok = len(report.cells) == 18
    for cell in report.cells:
        if not cell.status.startswith(("SUPPORTED", "REFUTED-AT", "UNTESTED")):
            ok = False
        if cell.params["m"] == 1 and cell.status != "SUPPORTED":
            ok = False
    _report(7, "maximal-weight probe report", ok)


def test_acceptance_8_self_conjugate_members():
    ok = True
    staircases = {EMPTY, Partition((1,)), Partition((2, 1)),
                  Partition((3, 2, 1)), Partition((4, 3, 2, 1))}
    for s in (8, 9):
        family = en.filter_distinct(en.filter_self_conjugate(en.enumerate_st_cores(s, s + 1)))
        if len(family) != 5 or set(family.members) != staircases:
            ok = False
        if len(family) != vf.self_conjugate_counts("plain", 1, s):
            ok = False

    for t in (14, 16):
        family = en.filter_distinct(en.filter_self_conjugate(en.enumerate_st_cores(5, t)))
        if len(family) != 3:
            ok = False
        if set(family.members) != {EMPTY, Partition((1,)), Partition((2, 1))}:
            ok = False
        # the third member is recorded by its minimal bead set {1, 3}
        if ab.partition_to_minimal_beadset(Partition((2, 1))) != {1, 3}:
            ok = False
    if vf.self_conjugate_counts("minus", 3, 5) != 3:
        ok = False
    if vf.self_conjugate_counts("plus", 3, 5) != 3:
        ok = False
    _report(8, "self-conjugate member lists", ok)


def test_acceptance_9_property_suites():
    ok = True
    cases = 0

    for p in pt.partitions_up_to(40):
        cases += 1
        beads = ab.partition_to_minimal_beadset(p)
        if ab.beadset_to_partition(beads) != p:
            ok = False
        if pt.conjugate(pt.conjugate(p)) != p:
            ok = False
        axis = ab.self_conjugate_axis_check(beads)
        if (axis is not None) != pt.is_self_conjugate(p):
            ok = False

    for p in pt.partitions_up_to(30):
        hooks = set(pt.hook_length_multiset(p))
        for t in range(1, 13):
            cases += 1
            if ab.is_t_core(p, t) != (t not in hooks):
                ok = False

    rng = random.Random(8723)
    for _ in range(400):
        cases += 1
        s, t = rng.randint(2, 8), rng.randint(2, 8)
        base_l = cx.build_a(s)
        base_r = cx.build_b(t, rng.choice((0, 1)))
        a, b = (_thin(rng, base_l) for _ in range(2))
        c, d = (_thin(rng, base_r) for _ in range(2))
        if cx.intersect(cx.wedge(a, c), cx.wedge(b, d)) != cx.wedge(
            cx.intersect(a, b), cx.intersect(c, d)
        ):
            ok = False

    if cases < 10_000:
        ok = False
    _report(9, "property suites", ok)


def _thin(rng: random.Random, a: ab.Abacus) -> ab.Abacus:
    return ab.Abacus(a.runners, frozenset(p for p in a.positions if rng.random() < 0.6))
