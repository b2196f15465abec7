"""Verification campaigns: run a dichotomy over an instance stream, verify
every certificate definitionally, cross-check arms against independent
oracles, and emit a deterministic report.

Modes:
- ``kotzig``: connected graphs with a perfect matching; the certificate must
  verify, its arm must agree with the matching-count oracle (capped at 2),
  and its serialization must round-trip through the untrusting checker.
- ``yeo``: connected colored instances; certificate verified + round-tripped.
- ``cross``: the matching dichotomy solved directly and via the two-coloring
  translation must agree on the arm, both certificates verifying.
- ``lemmas``: per-instance universal lemmas (degree-2 arc lemma, counting
  bounds, case exhaustiveness).

Reports are deterministic given (campaign, seed): the canonical JSON form
excludes wall time, so repeated runs are byte-identical.  Violations carry a
self-contained reproducer (the instance serialized) that ``replay_violation``
feeds back through the identical per-instance check.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from itertools import product
from random import Random
from typing import Iterator, Optional, Union

from .certificates import check_certificate, serialize_certificate
from .errors import ArgumentError, InternalInvariantError
from .formats import pair_order, parse_cel, parse_graph6, write_cel, write_graph6
from .graph import Graph, delete_edge, is_connected, random_graph
from .kotzig import kotzig_dichotomy, verify_kotzig_certificate
from .matching import count_perfect_matchings, first_perfect_matching
from .reductions import derive_kotzig_bridge_from_yeo
from .yeo import (
    AlternatingCycle,
    case1_pendant,
    case3_reduce,
    counting_report,
    cut_color_scan,
    degree2_lemma_check,
    find_alternating_cycle,
    is_cut_color_vertex,
    join_paths_to_cycle,
    lift_case3_cycle,
    lift_pendant_cycle,
    verify_alternating_cycle,
    verify_alternating_path,
    verify_cut_color,
    yeo_dichotomy,
)

MODES = ("kotzig", "yeo", "cross", "lemmas")
UNCOLORED_N_CAP = 7
COLORED_N_CAP = 5
DEFAULT_COLORING_CAP = 1024


# -- sources ---------------------------------------------------------------------


@dataclass(frozen=True)
class ExhaustiveSource:
    """All labeled simple graphs on exactly ``n`` vertices (smaller sizes
    are separate campaigns)."""

    n: int
    k_colors: int = 2


@dataclass(frozen=True)
class Graph6FileSource:
    path: str
    k_colors: int = 2


@dataclass(frozen=True)
class RandomSource:
    """``count`` seeded G(n, p) draws; graph i uses seed ``seed + i``."""

    n: int
    p: float
    count: int
    seed: int
    k_colors: int = 2


Source = Union[ExhaustiveSource, Graph6FileSource, RandomSource]


@dataclass(frozen=True)
class Campaign:
    """A verification run: what to check (mode), over which instances
    (source), how many colorings per graph at most, and the seed driving
    all sampling.  Exhaustive feasibility caps (n <= 7 uncolored, n <= 5
    colored) hold unless ``unsafe_scale`` is set."""

    mode: str
    source: Source
    coloring_cap: int = DEFAULT_COLORING_CAP
    seed: int = 0
    time_budget: Optional[float] = None
    unsafe_scale: bool = False

    def __post_init__(self):
        if self.mode not in MODES:
            raise ArgumentError(f"mode must be one of {MODES}")
        if not isinstance(self.source, (ExhaustiveSource, Graph6FileSource, RandomSource)):
            raise ArgumentError("unknown source type")
        if self.coloring_cap < 1:
            raise ArgumentError("coloring_cap must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ArgumentError("time_budget must be positive")
        if self.source.k_colors < 1:
            raise ArgumentError("k_colors must be >= 1")
        if isinstance(self.source, ExhaustiveSource) and not self.unsafe_scale:
            cap = COLORED_N_CAP if self.colored_mode else UNCOLORED_N_CAP
            if self.source.n > cap:
                raise ArgumentError(
                    f"exhaustive n={self.source.n} exceeds the feasibility cap {cap} "
                    f"for mode {self.mode!r}; pass unsafe_scale to override"
                )
        if isinstance(self.source, RandomSource):
            if self.source.count < 1:
                raise ArgumentError("random source count must be >= 1")
            if not 0.0 <= self.source.p <= 1.0:
                raise ArgumentError("edge probability must be in [0, 1]")
            if self.source.n < 0:
                raise ArgumentError("random source n must be >= 0")

    @property
    def colored_mode(self) -> bool:
        return self.mode in ("yeo", "lemmas")


@dataclass
class CampaignReport:
    """instances_tested counts everything enumerated; it always equals the
    sum of the per-arm counts plus the skipped (ineligible) count."""

    mode: str
    source: dict
    seed: int
    instances_tested: int
    skipped: int
    certificates_by_arm: dict
    violations: list
    wall_time: float
    partial: bool = False

    def __post_init__(self):
        if self.instances_tested != sum(self.certificates_by_arm.values()) + self.skipped:
            raise InternalInvariantError("instance count does not decompose into arms + skipped")

    def to_dict(self, include_wall_time: bool = True) -> dict:
        out = {
            "mode": self.mode,
            "source": self.source,
            "seed": self.seed,
            "instances_tested": self.instances_tested,
            "skipped": self.skipped,
            "certificates_by_arm": dict(sorted(self.certificates_by_arm.items())),
            "violations": self.violations,
            "partial": self.partial,
        }
        if include_wall_time:
            out["wall_time"] = self.wall_time
        return out

    def canonical_json(self) -> str:
        """Deterministic byte-identical form: wall time carries no
        information about the instances and is excluded."""
        return json.dumps(self.to_dict(include_wall_time=False), sort_keys=True,
                          separators=(",", ":")) + "\n"


# -- enumeration -----------------------------------------------------------------


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labeled simple graphs on n vertices, by ascending
    bitmask over the graph6 column pair order; edge ids follow that order."""
    if not 0 <= n <= UNCOLORED_N_CAP:
        raise ArgumentError(f"exhaustive enumeration is capped at n <= {UNCOLORED_N_CAP}")
    pairs = pair_order(n)
    m = len(pairs)
    for mask in range(1 << m):
        yield Graph.build(n, [pairs[j] for j in range(m) if (mask >> j) & 1])


def enumerate_colorings(g: Graph, k: int, cap: int, seed: int = 0) -> Iterator[Graph]:
    """All k^m colorings in lexicographic order (colors 0..k-1 assigned by
    stored edge order) when k^m <= cap; otherwise exactly ``cap`` seeded
    uniform samples (with replacement)."""
    if k < 1:
        raise ArgumentError("k must be >= 1")
    if cap < 1:
        raise ArgumentError("cap must be positive")
    m = len(g.edges)
    if k**m <= cap:
        for combo in product(range(k), repeat=m):
            yield g.with_colors(combo)
    else:
        rng = Random(seed)
        for _ in range(cap):
            yield g.with_colors([rng.randrange(k) for _ in range(m)])


def _source_graphs(c: Campaign) -> Iterator[Graph]:
    s = c.source
    if isinstance(s, ExhaustiveSource):
        yield from enumerate_labeled_graphs(s.n)
    elif isinstance(s, Graph6FileSource):
        with open(s.path, "r", encoding="ascii") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    yield parse_graph6(line)
    else:
        for i in range(s.count):
            yield random_graph(s.n, s.p, s.seed + i)


def _mix_seed(seed: int, graph_index: int) -> int:
    """Per-graph coloring-sampler seed: stable, documented, collision-free
    for any fixed campaign."""
    return seed * 1_000_003 + graph_index


def _instances(c: Campaign) -> Iterator[Graph]:
    if not c.colored_mode:
        yield from _source_graphs(c)
        return
    for gi, g in enumerate(_source_graphs(c)):
        yield from enumerate_colorings(
            g, c.source.k_colors, c.coloring_cap, seed=_mix_seed(c.seed, gi)
        )


# -- per-instance checks -----------------------------------------------------------


def _check_kotzig_instance(g: Graph) -> tuple[Optional[str], list[dict]]:
    """(arm, failures); arm None means ineligible/skipped."""
    if g.n < 2 or not is_connected(g):
        return None, []
    f = first_perfect_matching(g)
    if f is None:
        return None, []
    failures = []
    try:
        cert = kotzig_dichotomy(g, f)
    except (ArgumentError, InternalInvariantError, AssertionError) as exc:
        return "error", [{"kind": "solver_exception", "detail": f"{type(exc).__name__}: {exc}"}]
    if not verify_kotzig_certificate(g, f, cert):
        failures.append({"kind": "certificate_invalid", "detail": cert.arm})
    unique = count_perfect_matchings(g, cap=2) == 1
    if (cert.arm == "bridge") != unique:
        failures.append(
            {"kind": "arm_oracle_mismatch",
             "detail": f"arm={cert.arm} but oracle unique={unique}"}
        )
    res = check_certificate(g, serialize_certificate(cert))
    if not res.ok:
        failures.append({"kind": "roundtrip_rejected", "detail": f"{res.code}: {res.detail}"})
    return cert.arm, failures


def _check_yeo_instance(g: Graph) -> tuple[Optional[str], list[dict]]:
    if not g.is_colored or g.n < 2 or not is_connected(g):
        return None, []
    try:
        cert = yeo_dichotomy(g)
    except (ArgumentError, InternalInvariantError, AssertionError) as exc:
        return "error", [{"kind": "solver_exception", "detail": f"{type(exc).__name__}: {exc}"}]
    failures = []
    if isinstance(cert, AlternatingCycle):
        arm = "alt_cycle"
        if not verify_alternating_cycle(g, cert):
            failures.append({"kind": "certificate_invalid", "detail": arm})
    else:
        arm = "cut_color"
        if not verify_cut_color(g, cert):
            failures.append({"kind": "certificate_invalid", "detail": arm})
    res = check_certificate(g, serialize_certificate(cert))
    if not res.ok:
        failures.append({"kind": "roundtrip_rejected", "detail": f"{res.code}: {res.detail}"})
    return arm, failures


def _check_cross_instance(g: Graph) -> tuple[Optional[str], list[dict]]:
    if g.n < 2 or not is_connected(g):
        return None, []
    f = first_perfect_matching(g)
    if f is None:
        return None, []
    failures = []
    try:
        direct = kotzig_dichotomy(g, f)
        translated = derive_kotzig_bridge_from_yeo(g, f)
    except (ArgumentError, InternalInvariantError, AssertionError) as exc:
        return "error", [{"kind": "solver_exception", "detail": f"{type(exc).__name__}: {exc}"}]
    if not verify_kotzig_certificate(g, f, direct):
        failures.append({"kind": "certificate_invalid", "detail": f"direct {direct.arm}"})
    if not verify_kotzig_certificate(g, f, translated):
        failures.append({"kind": "certificate_invalid", "detail": f"translated {translated.arm}"})
    if direct.arm != translated.arm:
        failures.append(
            {"kind": "arm_disagreement",
             "detail": f"direct={direct.arm} translated={translated.arm}"}
        )
    return direct.arm, failures


def _check_lemmas_instance(g: Graph) -> tuple[Optional[str], list[dict]]:
    if not g.is_colored or g.n < 2 or not is_connected(g):
        return None, []
    failures = []
    try:
        bad = degree2_lemma_check(g)
        if bad:
            failures.append({"kind": "degree2_lemma", "detail": f"violating vertices {bad}"})
        rep = counting_report(g)
        if rep.flags.all_hold():
            if cut_color_scan(g) is None and find_alternating_cycle(g) is None:
                failures.append(
                    {"kind": "case_exhaustiveness",
                     "detail": "all case hypotheses hold yet neither certificate exists"}
                )
    except (ArgumentError, InternalInvariantError, AssertionError) as exc:
        return "error", [{"kind": "lemma_exception", "detail": f"{type(exc).__name__}: {exc}"}]
    return "checked", failures


_CHECKERS = {
    "kotzig": _check_kotzig_instance,
    "yeo": _check_yeo_instance,
    "cross": _check_cross_instance,
    "lemmas": _check_lemmas_instance,
}


def _serialize_instance(g: Graph) -> dict:
    """Self-contained replayable form of one instance."""
    if g.is_colored:
        return {"format": "cel", "text": write_cel(g)}
    simple = all(not e.is_loop for e in g.edges) and len(
        {(min(e.u, e.v), max(e.u, e.v)) for e in g.edges}
    ) == len(g.edges)
    if simple and g.n <= 62:
        return {"format": "graph6", "text": write_graph6(g)}
    return {"format": "cel", "text": write_cel(g)}


def _parse_instance(rep: dict) -> Graph:
    if rep["format"] == "graph6":
        return parse_graph6(rep["text"])
    if rep["format"] == "cel":
        return parse_cel(rep["text"])
    raise ArgumentError(f"unknown reproducer format {rep['format']!r}")


# -- the campaign runner -----------------------------------------------------------


def run_campaign(c: Campaign) -> CampaignReport:
    start = time.perf_counter()
    checker = _CHECKERS[c.mode]
    arms: dict[str, int] = {}
    violations: list[dict] = []
    tested = 0
    skipped = 0
    partial = False

    for idx, inst in enumerate(_instances(c)):
        if c.time_budget is not None and time.perf_counter() - start > c.time_budget:
            partial = True
            break
        tested += 1
        arm, failures = checker(inst)
        if arm is None:
            skipped += 1
            continue
        arms[arm] = arms.get(arm, 0) + 1
        for fail in failures:
            violations.append(
                {
                    "instance_index": idx,
                    "mode": c.mode,
                    "kind": fail["kind"],
                    "detail": fail["detail"],
                    "reproducer": _serialize_instance(inst),
                }
            )

    if isinstance(c.source, ExhaustiveSource):
        src = {"kind": "exhaustive", "n": c.source.n, "k_colors": c.source.k_colors}
    elif isinstance(c.source, Graph6FileSource):
        src = {"kind": "graph6_file", "path": c.source.path, "k_colors": c.source.k_colors}
    else:
        src = {
            "kind": "random",
            "n": c.source.n,
            "p": c.source.p,
            "count": c.source.count,
            "seed": c.source.seed,
            "k_colors": c.source.k_colors,
        }
    return CampaignReport(
        mode=c.mode,
        source=src,
        seed=c.seed,
        instances_tested=tested,
        skipped=skipped,
        certificates_by_arm=arms,
        violations=violations,
        wall_time=time.perf_counter() - start,
        partial=partial,
    )


def replay_violation(entry: dict) -> list[dict]:
    """Re-run the per-instance check on a violation's reproducer; returns
    the failures observed now (same kinds as the original entry when the
    failure is real and deterministic)."""
    g = _parse_instance(entry["reproducer"])
    arm, failures = _CHECKERS[entry["mode"]](g)
    return failures


# -- lifting batteries ---------------------------------------------------------------


def case3_lifting_battery(
    per_variant: int = 1000, seed: int = 0, max_attempts: Optional[int] = None
) -> dict:
    """Generate adjacent degree-2 instances by subdividing one edge of a
    seeded random colored base graph into a 3-edge path x-c1-c2-y, reduce at
    (c1, c2), search the reduced graph for an alternating cycle, lift it
    back, and verify it definitionally in the original.

    The glue variant uses distinct outer colors plus a third middle color
    (so a crossing cycle always lifts); the replace variant uses equal outer
    colors and a different middle one.  Runs until ``per_variant`` lifted
    cycles per variant or ``max_attempts``."""
    rng = Random(seed)
    if max_attempts is None:
        max_attempts = 60 * per_variant
    counts = {
        v: {"built": 0, "no_cycle": 0, "lifted": 0} for v in ("glue", "replace")
    }
    failures: list[dict] = []
    attempts = 0
    want = ("glue", "replace")
    while attempts < max_attempts and any(counts[v]["lifted"] < per_variant for v in want):
        attempts += 1
        variant_goal = "glue" if counts["glue"]["lifted"] <= counts["replace"]["lifted"] else "replace"
        n = rng.randint(4, 7)
        base = random_graph(n, 0.5, rng.randrange(1 << 30))
        if not base.edges or not is_connected(base):
            continue
        ei = rng.randrange(len(base.edges))
        x, y = base.edges[ei].u, base.edges[ei].v
        if variant_goal == "glue":
            alpha = rng.randrange(3)
            beta = (alpha + 1 + rng.randrange(2)) % 3
            gamma = 3 - alpha - beta
        else:
            alpha = rng.randrange(3)
            beta = alpha
            gamma = (alpha + 1 + rng.randrange(2)) % 3
        pairs = []
        for j, e in enumerate(base.edges):
            if j != ei:
                pairs.append((e.u, e.v, rng.randrange(3)))
        c1, c2 = n, n + 1
        pairs.extend([(x, c1, alpha), (c1, c2, gamma), (c2, y, beta)])
        g = Graph.build(n + 2, pairs)
        try:
            reduced, trace, variant = case3_reduce(g, c1, c2)
        except ArgumentError:
            continue
        if variant != variant_goal:
            failures.append({"kind": "variant_mismatch", "detail": f"{variant} != {variant_goal}"})
            continue
        counts[variant]["built"] += 1
        cyc = find_alternating_cycle(reduced)
        if cyc is None:
            counts[variant]["no_cycle"] += 1
            continue
        try:
            lifted = lift_case3_cycle(g, trace, variant, cyc)
        except (ArgumentError, InternalInvariantError) as exc:
            failures.append(
                {"kind": "lift_failed", "detail": f"{type(exc).__name__}: {exc}",
                 "reproducer": _serialize_instance(g)}
            )
            continue
        if not verify_alternating_cycle(g, lifted):
            failures.append(
                {"kind": "lifted_cycle_invalid", "detail": variant,
                 "reproducer": _serialize_instance(g)}
            )
            continue
        counts[variant]["lifted"] += 1
    return {
        "seed": seed,
        "attempts": attempts,
        "counts": counts,
        "failures": failures,
    }


def _pendant_instance_family(seed: int, n5_samples: int, n6_samples: int) -> Iterator[Graph]:
    """The documented search family for 'discoverable' pendant instances:
    every <=3-coloring of every connected labeled 4-vertex graph, plus seeded
    random colored samples at n = 5 (2 colors) and n = 6 (3 colors)."""
    for g in enumerate_labeled_graphs(4):
        if g.edges and is_connected(g):
            yield from enumerate_colorings(g, 3, cap=3**6)
    rng = Random(seed)
    made = 0
    while made < n5_samples:
        g = random_graph(5, 0.6, rng.randrange(1 << 30))
        if not g.edges or not is_connected(g):
            continue
        yield g.with_colors([rng.randrange(2) for _ in g.edges])
        made += 1
    made = 0
    while made < n6_samples:
        g = random_graph(6, 0.5, rng.randrange(1 << 30))
        if not g.edges or not is_connected(g):
            continue
        yield g.with_colors([rng.randrange(3) for _ in g.edges])
        made += 1


def pendant_lifting_battery(
    seed: int = 0, n5_samples: int = 500, n6_samples: int = 300
) -> dict:
    """Scan the documented family for every (edge, vertex, orientation)
    where the pendant construction applies; for each, search the grafted
    graph for an alternating cycle and exercise the full lift pipeline:

    - cycle through c -> lifted to a verified alternating v-b1 path;
    - cycle avoiding c -> mapped through the trace and re-verified in g;
    - when both orientations lift, the two paths are joined with the b1b2
      edge into a verified alternating cycle of g (junction-precondition
      failures are counted as skips: they mark instances outside the
      counterexample context, not lifting bugs)."""
    stats = {
        "instances_scanned": 0,
        "constructions": 0,
        "no_cycle": 0,
        "cycles_through_c": 0,
        "paths_lifted": 0,
        "cycles_avoiding_c": 0,
        "direct_cycles_verified": 0,
        "joined_cycles": 0,
        "join_skips": 0,
    }
    failures: list[dict] = []
    for g in _pendant_instance_family(seed, n5_samples, n6_samples):
        stats["instances_scanned"] += 1
        for e in g.edges:
            if e.is_loop:
                continue
            h, _ = delete_edge(g, e.eid)
            for v in range(g.n):
                if v in (e.u, e.v) or not is_cut_color_vertex(h, v):
                    continue
                paths = {}
                for b1 in (min(e.u, e.v), max(e.u, e.v)):
                    try:
                        cons = case1_pendant(g, e.eid, v, b1=b1)
                    except ArgumentError:
                        continue
                    stats["constructions"] += 1
                    cyc = find_alternating_cycle(cons.graph)
                    if cyc is None:
                        stats["no_cycle"] += 1
                        continue
                    if cons.c not in cyc.vertices:
                        stats["cycles_avoiding_c"] += 1
                        back = dict(cons.trace.vertex_map)
                        direct = AlternatingCycle(
                            g,
                            tuple(back[w] for w in cyc.vertices),
                            cyc.edge_ids,
                        )
                        if verify_alternating_cycle(g, direct):
                            stats["direct_cycles_verified"] += 1
                        else:
                            failures.append(
                                {"kind": "direct_cycle_invalid",
                                 "detail": f"edge {e.eid} v {v} b1 {b1}",
                                 "reproducer": _serialize_instance(g)}
                            )
                        continue
                    stats["cycles_through_c"] += 1
                    try:
                        path = lift_pendant_cycle(cons, cyc)
                    except (ArgumentError, InternalInvariantError) as exc:
                        failures.append(
                            {"kind": "path_lift_failed",
                             "detail": f"{type(exc).__name__}: {exc}",
                             "reproducer": _serialize_instance(g)}
                        )
                        continue
                    if not verify_alternating_path(g, path) or (
                        path.start != v or path.end != b1
                    ):
                        failures.append(
                            {"kind": "lifted_path_invalid",
                             "detail": f"edge {e.eid} v {v} b1 {b1}",
                             "reproducer": _serialize_instance(g)}
                        )
                        continue
                    stats["paths_lifted"] += 1
                    paths[b1] = path
                if len(paths) == 2:
                    pu, pw = (paths[min(paths)], paths[max(paths)])
                    try:
                        joined = join_paths_to_cycle(pu, pw, (e.eid,))
                    except ArgumentError:
                        stats["join_skips"] += 1
                    else:
                        if verify_alternating_cycle(g, joined):
                            stats["joined_cycles"] += 1
                        else:
                            failures.append(
                                {"kind": "joined_cycle_invalid",
                                 "detail": f"edge {e.eid} v {v}",
                                 "reproducer": _serialize_instance(g)}
                            )
    return {"seed": seed, "stats": stats, "failures": failures}
