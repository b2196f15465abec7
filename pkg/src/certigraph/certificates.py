"""Certificate serialization and independent re-checking.

Schema: ``{"theorem": "kotzig"|"yeo", "arm": "bridge"|"second_matching"|
"cut_color"|"alt_cycle", "data": {...}, "graph_hash": hex}``.

``graph_hash`` is the SHA-256 of the canonical labeled edge list (not
isomorphism-invariant): certificates bind to one labeled instance.  The
checker never trusts the producer: it re-derives every claim definitionally
against the graph it is handed, reporting distinct codes for schema breaks,
hash (wrong graph) mismatches, and definitional failures.

Cut-color component keys are serialized as each component's smallest
original vertex id, so the JSON is meaningful without knowing how the
in-memory partition happens to index components.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Union

from .errors import ArgumentError
from .graph import Graph, components, delete_vertex
from .kotzig import MatchingBridge, SecondMatching, verify_kotzig_certificate
from .matching import Matching
from .yeo import (
    AlternatingCycle,
    CutColorCertificate,
    verify_alternating_cycle,
    verify_cut_color,
)

Certificate = Union[MatchingBridge, SecondMatching, CutColorCertificate, AlternatingCycle]

_ARMS = {
    "kotzig": ("bridge", "second_matching"),
    "yeo": ("cut_color", "alt_cycle"),
}

OK = "ok"
SCHEMA_MISMATCH = "schema_mismatch"
HASH_MISMATCH = "hash_mismatch"
DEFINITIONAL_FAILURE = "definitional_failure"


@dataclass(frozen=True)
class CheckResult:
    """Boolean verdict with a distinct code for each failure kind."""

    ok: bool
    code: str
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def canonical_graph_text(g: Graph) -> str:
    """Canonical serialization of the labeled instance: vertex count plus
    the edge list (id, endpoints, color) in id order."""
    return json.dumps(
        {"n": g.n, "edges": [[e.eid, e.u, e.v, e.color] for e in g.edges]},
        sort_keys=True,
        separators=(",", ":"),
    )


def graph_hash(g: Graph) -> str:
    return hashlib.sha256(canonical_graph_text(g).encode("ascii")).hexdigest()


def _component_keys(g: Graph, v: int) -> dict[int, int]:
    """component index of g - v  ->  smallest original vertex id inside it."""
    h, _ = delete_vertex(g, v)
    part = components(h)
    keys: dict[int, int] = {}
    for w in range(h.n):
        orig = w if w < v else w + 1
        comp = part.component_of[w]
        if comp not in keys or orig < keys[comp]:
            keys[comp] = orig
    return keys


def serialize_certificate(cert: Certificate) -> str:
    """Canonical JSON text (sorted keys, compact separators)."""
    if isinstance(cert, MatchingBridge):
        payload = {
            "theorem": "kotzig",
            "arm": "bridge",
            "data": {
                "edge_id": cert.edge_id,
                "base_matching": sorted(cert.base_matching.edge_ids),
            },
            "graph_hash": graph_hash(cert.graph),
        }
    elif isinstance(cert, SecondMatching):
        if cert.base_matching.graph != cert.matching.graph:
            raise ArgumentError("second-matching certificate mixes two graphs")
        payload = {
            "theorem": "kotzig",
            "arm": "second_matching",
            "data": {
                "matching": sorted(cert.matching.edge_ids),
                "base_matching": sorted(cert.base_matching.edge_ids),
            },
            "graph_hash": graph_hash(cert.matching.graph),
        }
    elif isinstance(cert, CutColorCertificate):
        keys = _component_keys(cert.graph, cert.v)
        try:
            payload = {
                "theorem": "yeo",
                "arm": "cut_color",
                "data": {
                    "vertex": cert.v,
                    "component_colors": sorted(
                        [keys[c], color] for c, color in cert.component_colors
                    ),
                    "witness_edges": sorted(
                        [keys[c], eid] for c, eid in cert.witness_edges
                    ),
                },
                "graph_hash": graph_hash(cert.graph),
            }
        except KeyError as exc:
            raise ArgumentError(f"certificate names a nonexistent component {exc}") from None
    elif isinstance(cert, AlternatingCycle):
        payload = {
            "theorem": "yeo",
            "arm": "alt_cycle",
            "data": {
                "vertices": list(cert.vertices),
                "edges": list(cert.edge_ids),
            },
            "graph_hash": graph_hash(cert.graph),
        }
    else:
        raise ArgumentError(f"unknown certificate type {type(cert).__name__}")
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _int_list(x) -> bool:
    return isinstance(x, list) and all(isinstance(i, int) and not isinstance(i, bool) for i in x)


def _pair_list(x) -> bool:
    return isinstance(x, list) and all(
        isinstance(p, list) and len(p) == 2 and _int_list(p) for p in x
    )


def check_certificate(g: Graph, text: str) -> CheckResult:
    """Re-verify serialized evidence against g, definitionally.

    Codes: ``schema_mismatch`` (unparseable or ill-shaped JSON),
    ``hash_mismatch`` (certificate binds to a different labeled graph),
    ``definitional_failure`` (well-formed but the claimed object is not what
    it says it is), ``ok`` otherwise."""
    try:
        payload = json.loads(text)
    except (json.JSONDecodeError, TypeError) as exc:
        return CheckResult(False, SCHEMA_MISMATCH, f"unparseable JSON: {exc}")
    if not isinstance(payload, dict) or set(payload) != {"theorem", "arm", "data", "graph_hash"}:
        return CheckResult(False, SCHEMA_MISMATCH, "expected exactly theorem/arm/data/graph_hash")
    theorem, arm, data, ghash = (
        payload["theorem"],
        payload["arm"],
        payload["data"],
        payload["graph_hash"],
    )
    if theorem not in _ARMS or arm not in _ARMS.get(theorem, ()):
        return CheckResult(False, SCHEMA_MISMATCH, f"unknown theorem/arm {theorem!r}/{arm!r}")
    if not isinstance(data, dict) or not isinstance(ghash, str):
        return CheckResult(False, SCHEMA_MISMATCH, "data must be an object, graph_hash a string")

    shape_ok = {
        "bridge": lambda d: set(d) == {"edge_id", "base_matching"}
        and isinstance(d["edge_id"], int)
        and not isinstance(d["edge_id"], bool)
        and _int_list(d["base_matching"]),
        "second_matching": lambda d: set(d) == {"matching", "base_matching"}
        and _int_list(d["matching"])
        and _int_list(d["base_matching"]),
        "cut_color": lambda d: set(d) == {"vertex", "component_colors", "witness_edges"}
        and isinstance(d["vertex"], int)
        and not isinstance(d["vertex"], bool)
        and _pair_list(d["component_colors"])
        and _pair_list(d["witness_edges"]),
        "alt_cycle": lambda d: set(d) == {"vertices", "edges"}
        and _int_list(d["vertices"])
        and _int_list(d["edges"]),
    }[arm]
    if not shape_ok(data):
        return CheckResult(False, SCHEMA_MISMATCH, f"malformed data for arm {arm!r}")

    if ghash != graph_hash(g):
        return CheckResult(False, HASH_MISMATCH, "certificate binds to a different labeled graph")

    try:
        if arm == "bridge":
            f = Matching(g, frozenset(data["base_matching"]))
            cert: Certificate = MatchingBridge(g, f, data["edge_id"])
            ok = verify_kotzig_certificate(g, f, cert)
        elif arm == "second_matching":
            f = Matching(g, frozenset(data["base_matching"]))
            cert = SecondMatching(f, Matching(g, frozenset(data["matching"])))
            ok = verify_kotzig_certificate(g, f, cert)
        elif arm == "cut_color":
            v = data["vertex"]
            if not (0 <= v < g.n):
                return CheckResult(False, DEFINITIONAL_FAILURE, f"vertex {v} out of range")
            keys = _component_keys(g, v)
            by_key = {key: comp for comp, key in keys.items()}
            try:
                comp_colors = tuple(
                    sorted((by_key[key], color) for key, color in data["component_colors"])
                )
                witnesses = tuple(
                    sorted((by_key[key], eid) for key, eid in data["witness_edges"])
                )
            except KeyError as exc:
                return CheckResult(
                    False, DEFINITIONAL_FAILURE, f"no component with smallest vertex {exc}"
                )
            ok = verify_cut_color(g, CutColorCertificate(g, v, comp_colors, witnesses))
        else:
            ok = verify_alternating_cycle(
                g, AlternatingCycle(g, tuple(data["vertices"]), tuple(data["edges"]))
            )
    except ArgumentError as exc:
        return CheckResult(False, DEFINITIONAL_FAILURE, str(exc))

    if not ok:
        return CheckResult(False, DEFINITIONAL_FAILURE, f"{arm} claim fails its definition")
    return CheckResult(True, OK)
