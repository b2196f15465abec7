"""Acceptance suite: one test per numbered criterion, each run end to end at
its stated scale and tolerance, printing a single PASS/FAIL line.

The heavy campaigns are module-scoped fixtures so the determinism criterion
can re-run them and compare byte-for-byte without paying for a third run.
Frozen instance/arm counts pin not just "zero violations" but the exact
instance sets the sweeps covered.
"""

from __future__ import annotations

import pytest

from certigraph import (
    AlternatingCycle,
    Graph,
    check_certificate,
    counting_report,
    first_perfect_matching,
    is_connected,
    kotzig_dichotomy,
    parse_cel,
    parse_graph6,
    serialize_certificate,
    write_cel,
    write_graph6,
    yeo_dichotomy,
)
from certigraph.campaigns import (
    Campaign,
    ExhaustiveSource,
    RandomSource,
    case3_lifting_battery,
    enumerate_colorings,
    enumerate_labeled_graphs,
    pendant_lifting_battery,
    run_campaign,
)

from test_certificates import certificate_mutants

pytestmark = pytest.mark.slow

# criterion-2 grid: 9 cells x ~1111 graphs = exactly 10,000 instances
RANDOM_CELLS = [
    (n, p, 1112 if i == 0 else 1111, 1_000 * (i + 1))
    for i, (n, p) in enumerate(
        (n, p) for n in (8, 10, 12) for p in (0.2, 0.4, 0.6)
    )
]

# criterion-3 sources: n=4 with every k <= 3, n=5 with 2 colors, full
# coloring enumeration (the cap is far above every k^m that occurs)
YEO_SOURCES = [(4, 1), (4, 2), (4, 3), (5, 2)]

EXPECTED_YEO = {
    (4, 1): (64, 26, {"cut_color": 38}),
    (4, 2): (729, 105, {"alt_cycle": 48, "cut_color": 576}),
    (4, 3): (4096, 262, {"alt_cycle": 1008, "cut_color": 2826}),
    (5, 2): (59049, 3801, {"alt_cycle": 6812, "cut_color": 48436}),
}

EXPECTED_LEMMAS = {
    (4, 1): (64, 26, {"checked": 38}),
    (4, 2): (729, 105, {"checked": 624}),
    (4, 3): (4096, 262, {"checked": 3834}),
    (5, 2): (59049, 3801, {"checked": 55248}),
}


def _line(number: int, description: str, ok: bool, detail: str = ""):
    verdict = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {number} {description}: {verdict}")
    assert ok, f"criterion {number} ({description}) failed{': ' + detail if detail else ''}"


@pytest.fixture(scope="module")
def kotzig_n6():
    return run_campaign(Campaign("kotzig", ExhaustiveSource(6)))


@pytest.fixture(scope="module")
def cross_n6():
    return run_campaign(Campaign("cross", ExhaustiveSource(6)))


@pytest.fixture(scope="module")
def random_reports():
    return {
        (n, p): run_campaign(
            Campaign("kotzig", RandomSource(n=n, p=p, count=count, seed=seed))
        )
        for n, p, count, seed in RANDOM_CELLS
    }


@pytest.fixture(scope="module")
def yeo_reports():
    return {
        (n, k): run_campaign(
            Campaign("yeo", ExhaustiveSource(n, k_colors=k), coloring_cap=3**10)
        )
        for n, k in YEO_SOURCES
    }


@pytest.fixture(scope="module")
def lemmas_reports():
    return {
        (n, k): run_campaign(
            Campaign("lemmas", ExhaustiveSource(n, k_colors=k), coloring_cap=3**10)
        )
        for n, k in YEO_SOURCES
    }


def test_criterion_1_kotzig_exhaustive_n6(kotzig_n6):
    rep = kotzig_n6
    ok = (
        rep.instances_tested == 32768
        and rep.skipped == 8470
        and rep.certificates_by_arm == {"bridge": 7860, "second_matching": 16438}
        and rep.violations == []
        and rep.partial is False
        and rep.wall_time < 60.0
    )
    _line(
        1,
        "kotzig exhaustive n=6, arm == uniqueness oracle, wall < 60s",
        ok,
        f"counts={rep.certificates_by_arm} skipped={rep.skipped} "
        f"violations={len(rep.violations)} wall={rep.wall_time:.1f}s",
    )


def test_criterion_2_kotzig_randomized_10k(random_reports):
    total = sum(rep.instances_tested for rep in random_reports.values())
    violations = [v for rep in random_reports.values() for v in rep.violations]
    cells_ok = all(
        random_reports[(n, p)].instances_tested == count
        for n, p, count, _ in RANDOM_CELLS
    )
    ok = total == 10_000 and violations == [] and cells_ok
    _line(
        2,
        "kotzig randomized 10,000 seeded graphs n in {8,10,12} p in {0.2,0.4,0.6}",
        ok,
        f"total={total} violations={len(violations)}",
    )


def test_criterion_3_yeo_exhaustive(yeo_reports):
    wall = sum(rep.wall_time for rep in yeo_reports.values())
    mismatches = {
        key: (rep.instances_tested, rep.skipped, dict(sorted(rep.certificates_by_arm.items())))
        for key, rep in yeo_reports.items()
        if (rep.instances_tested, rep.skipped, dict(sorted(rep.certificates_by_arm.items())))
        != EXPECTED_YEO[key]
    }
    violations = [v for rep in yeo_reports.values() for v in rep.violations]
    ok = not mismatches and violations == [] and wall < 600.0
    _line(
        3,
        "yeo exhaustive n=4 all k<=3 colorings + n=5 all 2-colorings, wall < 600s",
        ok,
        f"mismatches={mismatches} violations={len(violations)} wall={wall:.1f}s",
    )


def test_criterion_4_cross_theorem_agreement(kotzig_n6, cross_n6):
    rep = cross_n6
    ok = (
        rep.violations == []
        and rep.instances_tested == kotzig_n6.instances_tested
        and rep.skipped == kotzig_n6.skipped
        and rep.certificates_by_arm == kotzig_n6.certificates_by_arm
    )
    _line(
        4,
        "derive_kotzig_bridge_from_yeo arm agreement on the n=6 set, all verified",
        ok,
        f"arms={rep.certificates_by_arm} violations={len(rep.violations)}",
    )


def test_criterion_5_degree2_lemma(lemmas_reports):
    offenders = [
        v
        for rep in lemmas_reports.values()
        for v in rep.violations
        if v["kind"] == "degree2_lemma"
    ]
    counts_ok = all(
        (rep.instances_tested, rep.skipped, dict(rep.certificates_by_arm))
        == EXPECTED_LEMMAS[key]
        for key, rep in lemmas_reports.items()
    )
    ok = offenders == [] and counts_ok
    _line(
        5,
        "degree-2 arc lemma empty on every criterion-3 instance",
        ok,
        f"offenders={len(offenders)}",
    )


def test_criterion_6_counting_inequalities(lemmas_reports):
    bad_kinds = {"lemma_exception", "case_exhaustiveness"}
    offenders = [
        v
        for rep in lemmas_reports.values()
        for v in rep.violations
        if v["kind"] in bad_kinds
    ]
    # direct exact-arithmetic sweep of the handshake bound on the n=4
    # 2-coloring family: e >= (2x + 3(v-x))/2 whenever min degree >= 2
    direct_failures = 0
    checked = 0
    for g in enumerate_labeled_graphs(4):
        if not g.edges or not is_connected(g):
            continue
        for colored in enumerate_colorings(g, 2, cap=3**10):
            rep = counting_report(colored)
            if rep.flags.min_degree_ge_2:
                checked += 1
                if rep.e_count < rep.edge_lb:
                    direct_failures += 1
    ok = offenders == [] and direct_failures == 0 and checked > 0
    _line(
        6,
        "handshake bound exact + empirical case-exhaustiveness, zero exceptions",
        ok,
        f"offenders={len(offenders)} direct_failures={direct_failures}",
    )


def test_criterion_7_lifting_batteries():
    case3 = case3_lifting_battery(per_variant=1000, seed=0)
    pendant = pendant_lifting_battery(seed=0, n5_samples=500, n6_samples=300)
    stats = pendant["stats"]
    ok = (
        case3["failures"] == []
        and case3["counts"]["glue"]["lifted"] >= 1000
        and case3["counts"]["replace"]["lifted"] >= 1000
        and pendant["failures"] == []
        and stats["constructions"] == 16273
        and stats["paths_lifted"] == stats["cycles_through_c"] == 7694
        and stats["direct_cycles_verified"] == stats["cycles_avoiding_c"] == 7
        and stats["joined_cycles"] == 295
    )
    _line(
        7,
        ">=1000 case-3 lifts per variant + all discoverable pendant lifts verify",
        ok,
        f"case3={case3['counts']} pendant={stats} "
        f"failures={len(case3['failures']) + len(pendant['failures'])}",
    )


def test_criterion_8_format_fidelity(kotzig_n6, yeo_reports, random_reports):
    # graph6 identity on the full n <= 7 corpus
    g6_failures = 0
    g6_total = 0
    for n in range(8):
        for g in enumerate_labeled_graphs(n):
            g6_total += 1
            if parse_graph6(write_graph6(g)) != g:
                g6_failures += 1
    # .cel identity including colors: every 3-coloring of every n=4 graph,
    # plus colored multigraphs with loops and parallels
    cel_failures = 0
    cel_total = 0
    multi = [
        Graph.build(2, [(0, 1, 0), (0, 1, 1)]),
        Graph.build(1, [(0, 0, 3)]),
        Graph.build(3, [(0, 1, 2), (0, 1, 2), (1, 1, 0), (1, 2, 1)]),
    ]
    for g in multi:
        cel_total += 1
        if parse_cel(write_cel(g)) != g:
            cel_failures += 1
    for g in enumerate_labeled_graphs(4):
        for colored in enumerate_colorings(g, 3, cap=3**10):
            cel_total += 1
            if parse_cel(write_cel(colored)) != colored:
                cel_failures += 1
    # the checker accepted every solver-emitted certificate in the cached
    # campaigns (each instance round-trips through check_certificate)
    emitted_rejections = [
        v
        for rep in [kotzig_n6, *yeo_reports.values(), *random_reports.values()]
        for v in rep.violations
        if v["kind"] == "roundtrip_rejected"
    ]
    # mutation battery: systematic tampers over a mixed-arm certificate pool
    pool = []
    for g in enumerate_labeled_graphs(4):
        if g.n < 2 or not g.edges or not is_connected(g):
            continue
        f = first_perfect_matching(g)
        if f is not None:
            pool.append((g, serialize_certificate(kotzig_dichotomy(g, f))))
    alt, cut = 0, 0
    for g in enumerate_labeled_graphs(4):
        if not g.edges or not is_connected(g):
            continue
        for colored in enumerate_colorings(g, 3, cap=3**10):
            cert = yeo_dichotomy(colored)
            if isinstance(cert, AlternatingCycle):
                if alt < 16:
                    alt += 1
                    pool.append((colored, serialize_certificate(cert)))
            elif cut < 16:
                cut += 1
                pool.append((colored, serialize_certificate(cert)))
            if alt >= 16 and cut >= 16:
                break
        if alt >= 16 and cut >= 16:
            break
    tamper_total = 0
    tamper_accepted = []
    for g, text in pool:
        assert check_certificate(g, text).ok
        for label, mutant in certificate_mutants(text):
            tamper_total += 1
            if check_certificate(g, mutant).ok:
                tamper_accepted.append(label)
    ok = (
        g6_failures == 0
        and g6_total == 2_131_020  # sum over n<=7 of 2^(n choose 2)
        and cel_failures == 0
        and emitted_rejections == []
        and tamper_total >= 500
        and tamper_accepted == []
    )
    _line(
        8,
        "graph6/.cel round-trip identity + checker accepts all emitted, rejects all tampers",
        ok,
        f"g6={g6_failures}/{g6_total} cel={cel_failures}/{cel_total} "
        f"emitted_rejected={len(emitted_rejections)} "
        f"tampers={len(tamper_accepted)}/{tamper_total} accepted",
    )


def test_criterion_9_campaign_determinism(kotzig_n6, yeo_reports, lemmas_reports, random_reports):
    repeats = {
        "kotzig exhaustive n=6": (
            kotzig_n6,
            run_campaign(Campaign("kotzig", ExhaustiveSource(6))),
        ),
        "yeo exhaustive n=4 k=3": (
            yeo_reports[(4, 3)],
            run_campaign(Campaign("yeo", ExhaustiveSource(4, k_colors=3), coloring_cap=3**10)),
        ),
        "lemmas exhaustive n=4 k=2": (
            lemmas_reports[(4, 2)],
            run_campaign(Campaign("lemmas", ExhaustiveSource(4, k_colors=2), coloring_cap=3**10)),
        ),
        "kotzig random n=10 p=0.4": (
            random_reports[(10, 0.4)],
            run_campaign(
                Campaign(
                    "kotzig",
                    RandomSource(n=10, p=0.4, count=1111, seed=5_000),
                )
            ),
        ),
    }
    differing = [
        name
        for name, (first, second) in repeats.items()
        if first.canonical_json() != second.canonical_json()
    ]
    _line(
        9,
        "repeated campaigns byte-identical (exhaustive, colored, random)",
        differing == [],
        f"differing={differing}",
    )
