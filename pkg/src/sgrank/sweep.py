"""Exhaustive verification sweeps over small signed graphs.

Two built-in graph streams plus optional graph6 files:

* dense slice: every connected labeled graph with a cycle on up to
  `max_n_dense` vertices (edge-subset enumeration, vectorized
  connectivity/girth prefilters);
* sparse slice: connected graphs with cyclomatic number up to
  `max_cyclomatic` on up to `max_n_sparse` vertices, built constructively:
  the finitely many multigraph cores of minimum degree 3 (19 of them for
  cyclomatic number <= 3), subdivided in all ways that keep the graph
  simple, with rooted trees hung on core vertices.  Every isomorphism
  class appears at least once; relabeled duplicates are possible and
  harmless for universal assertions.

Per underlying graph, one signing per switching class is enumerated
(spanning-tree edges positive, all co-tree sign patterns; pattern 0 is
the balanced representative).  Ranks come from the batched modular
kernel, which is exact at these orders.  Checks are vectorized across
instance buffers; the structured families that the extremal classifiers
can accept are re-classified per signing in Python, and sampled
instances are re-verified against fraction-free elimination and the full
classifier stack.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from multiprocessing import get_context
from typing import Iterator, Sequence

import numpy as np

from .core import (
    SignedGraph,
    adjacency_matrix,
    find_twins,
    induced_subgraph,
    reduced_graph,
    switch,
    write_sgr,
)
from .exact import batch_ranks, rank as exact_rank
from .invariants import (
    bipartition,
    girth_of_adjacency,
    is_connected,
    shortest_cycle,
)
from .classify import (
    _detect_subdivided_k4,
    _detect_theta,
    classify_equals_g,
    classify_gminus2,
)

_BUFFER_INSTANCES = 1 << 17
_SIGNING_BLOCK = 1 << 15
_DENSE_CHUNK_MASKS = 1 << 18
_SPARSE_CHUNK_GRAPHS = 4096
_GRAPH6_CHUNK_RECORDS = 1024


# ---------------------------------------------------------------------------
# check registry


@dataclass(frozen=True)
class CheckInfo:
    default: bool
    kind: str  # "vector", "spot" or "instance"
    doc: str


CHECKS: dict[str, CheckInfo] = {
    "rank_ge_girth_minus_2": CheckInfo(
        True, "vector", "rank is at least girth minus 2"
    ),
    "rank_ne_girth_minus_1": CheckInfo(
        True, "vector", "rank never equals girth minus 1"
    ),
    "girth_minus_2_iff_classified": CheckInfo(
        True, "vector", "rank == girth-2 exactly on classify_gminus2 matches"
    ),
    "equals_girth_iff_classified": CheckInfo(
        True,
        "vector",
        "rank == girth exactly on classify_equals_g matches (girth 4 "
        "handled by girth_four_consequences)",
    ),
    "girth_four_consequences": CheckInfo(
        True,
        "vector",
        "girth-4 rank-4 instances have bipartite underlying graph and "
        "twin-reduced rank 4",
    ),
    "spot_check_exact_rank": CheckInfo(
        True, "spot", "sampled instances rerun through fraction-free elimination"
    ),
    "spot_check_classifier": CheckInfo(
        True, "spot", "sampled instances rerun through the full classifiers"
    ),
    "rank_ge_girth_minus_1": CheckInfo(
        False,
        "vector",
        "deliberately false claim (self-test of counterexample reporting)",
    ),
    "pendant_identity": CheckInfo(
        False, "instance", "pendant vertex: rank drops by exactly 2 with its neighbor"
    ),
    "vertex_deletion_bounds": CheckInfo(
        False, "instance", "deleting one vertex changes rank by at most 2, never up"
    ),
    "nullity_cyclomatic_bound": CheckInfo(
        False,
        "instance",
        "non-cycles: nullity <= pendants + 2*cyclomatic - 1",
    ),
    "outside_vertex_girth": CheckInfo(
        False,
        "instance",
        "a vertex with 2+ neighbors on a shortest cycle forces girth <= 4",
    ),
    "switching_invariance": CheckInfo(
        False, "instance", "random switching preserves the rank"
    ),
    "twin_deletion_rank": CheckInfo(
        False, "instance", "twin-reduced graph keeps the rank"
    ),
}

DEFAULT_CHECKS: tuple[str, ...] = tuple(
    name for name, info in CHECKS.items() if info.default
)

_SPOT_RANK_STRIDE = 2048
_SPOT_CLASSIFY_STRIDE = 4096


@dataclass(frozen=True)
class SweepConfig:
    max_n_dense: int = 7
    max_n_sparse: int = 10
    max_cyclomatic: int = 3
    graph6_paths: tuple[str, ...] = ()
    jobs: int = 1
    checks: tuple[str, ...] = DEFAULT_CHECKS
    max_counterexamples: int = 50

    def validate(self) -> None:
        if not (0 <= self.max_n_dense <= 7):
            raise ValueError("dense slice supports up to 7 vertices")
        if not (0 <= self.max_n_sparse <= 12):
            raise ValueError("sparse slice supports up to 12 vertices")
        if not (1 <= self.max_cyclomatic <= 3):
            raise ValueError("sparse slice supports cyclomatic numbers 1..3")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")
        unknown = [name for name in self.checks if name not in CHECKS]
        if unknown:
            raise ValueError(
                f"unknown checks {unknown}; known: {sorted(CHECKS)}"
            )


@dataclass
class SweepReport:
    config: SweepConfig
    graphs: int = 0
    instances: int = 0
    checked: dict = field(default_factory=dict)
    failures: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    skipped_graph6_records: int = 0
    elapsed_seconds: float = 0.0

    def total_failures(self) -> int:
        return sum(self.failures.values())

    def to_json_dict(self) -> dict:
        checks = {
            name: {
                "checked": self.checked.get(name, 0),
                "failures": self.failures.get(name, 0),
            }
            for name in sorted(self.config.checks)
        }
        return {
            "schema": 1,
            "config": {
                "max_n_dense": self.config.max_n_dense,
                "max_n_sparse": self.config.max_n_sparse,
                "max_cyclomatic": self.config.max_cyclomatic,
                "graph6_paths": list(self.config.graph6_paths),
                "jobs": self.config.jobs,
                "checks": sorted(self.config.checks),
                "max_counterexamples": self.config.max_counterexamples,
            },
            "totals": {
                "graphs": self.graphs,
                "instances": self.instances,
                "failures": self.total_failures(),
                "skipped_graph6_records": self.skipped_graph6_records,
            },
            "checks": checks,
            "counterexamples": self.counterexamples,
            "elapsed_seconds": round(self.elapsed_seconds, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)


def write_counterexamples_csv(report: SweepReport, path: str) -> None:
    import csv

    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["check", "source", "n", "m", "girth", "rank", "signing_index", "edges", "sgr"]
        )
        for ce in report.counterexamples:
            writer.writerow(
                [
                    ce["check"],
                    ce["source"],
                    ce["n"],
                    ce["m"],
                    ce["girth"],
                    ce["rank"],
                    ce["signing_index"],
                    ce["edges"],
                    ce["sgr"],
                ]
            )


# ---------------------------------------------------------------------------
# signing enumeration


def _spanning_cotree(n: int, edges: Sequence[tuple[int, int]]) -> list[int]:
    """Indexes of non-tree edges (ascending) for the BFS tree from vertex 0."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        adj[u].append((v, i))
        adj[v].append((u, i))
    seen = [False] * n
    seen[0] = True
    tree: set[int] = set()
    queue = [0]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        for v, i in adj[u]:
            if not seen[v]:
                seen[v] = True
                tree.add(i)
                queue.append(v)
    if not all(seen):
        raise ValueError("graph is not connected")
    return [i for i in range(len(edges)) if i not in tree]


def enumerate_signings(
    n: int, edges: Sequence[tuple[int, int]]
) -> Iterator[SignedGraph]:
    """One signed graph per switching class of the underlying graph:
    spanning-tree edges positive, each co-tree sign pattern once.
    Pattern 0 (first yield) is all-positive, the balanced class."""
    cotree = _spanning_cotree(n, edges)
    pos = {e: t for t, e in enumerate(cotree)}
    for pattern in range(1 << len(cotree)):
        signed = []
        for i, (u, v) in enumerate(edges):
            s = -1 if i in pos and (pattern >> pos[i]) & 1 else 1
            signed.append((u, v, s))
        yield SignedGraph(n, signed)


def canonical_switching_representative(g: SignedGraph) -> SignedGraph:
    """The member of g's switching class whose BFS spanning-tree edges
    (from vertex 0) are all positive.  Equal for switching-equivalent
    inputs on the same underlying graph."""
    if not is_connected(g):
        raise ValueError("need a connected graph")
    signs = g.sign_map()
    theta = [0] * g.n
    theta[0] = 1
    adj = g.neighbors()
    queue = [0]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        for v in adj[u]:
            if theta[v] == 0:
                theta[v] = theta[u] * signs[(min(u, v), max(u, v))]
                queue.append(v)
    edges = [(u, v, s * theta[u] * theta[v]) for u, v, s in g.edges]
    return SignedGraph(g.n, edges)


# ---------------------------------------------------------------------------
# dense stream


@lru_cache(maxsize=None)
def _edge_table(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))

_POPCOUNT = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)


def _dense_chunk(n: int, lo: int, hi: int):
    """Connected cyclic graphs among edge masks [lo, hi): arrays of
    (mask, edge count, girth hint) with hint 0 for girth >= 5."""
    table = _edge_table(n)
    n_edges = len(table)
    masks = np.arange(lo, hi, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(n_edges, dtype=np.int64)) & 1).astype(
        np.uint8
    )
    m = bits.sum(axis=1, dtype=np.int64)
    nb = np.zeros((len(masks), n), dtype=np.uint8)
    for e, (u, v) in enumerate(table):
        nb[:, u] |= bits[:, e] << v
        nb[:, v] |= bits[:, e] << u
    reach = np.ones(len(masks), dtype=np.uint8)
    for _ in range(n):
        for v in range(n):
            sel = (reach >> v) & 1
            reach |= nb[:, v] * sel
    keep = (m >= n) & (reach == (1 << n) - 1)

    tri = np.zeros(len(masks), dtype=bool)
    for e, (u, v) in enumerate(table):
        tri |= (bits[:, e] == 1) & ((nb[:, u] & nb[:, v]) != 0)
    sq = np.zeros(len(masks), dtype=bool)
    for u in range(n):
        for v in range(u + 1, n):
            sq |= _POPCOUNT[nb[:, u] & nb[:, v]] >= 2
    hint = np.where(tri, 3, np.where(sq, 4, 0)).astype(np.int64)
    return masks[keep], m[keep], hint[keep]


def _mask_edges(n: int, mask: int) -> list[tuple[int, int]]:
    table = _edge_table(n)
    return [table[i] for i in range(len(table)) if (mask >> i) & 1]


def dense_graphs(n: int) -> Iterator[tuple[int, list[tuple[int, int]]]]:
    """All connected labeled graphs with a cycle on exactly n vertices,
    as (mask, edges), ascending by mask."""
    total = 1 << len(_edge_table(n))
    for lo in range(0, total, _DENSE_CHUNK_MASKS):
        masks, _, _ = _dense_chunk(n, lo, min(lo + _DENSE_CHUNK_MASKS, total))
        for mask in masks.tolist():
            yield mask, _mask_edges(n, mask)


# ---------------------------------------------------------------------------
# sparse stream: subdivided multigraph cores plus pendant trees

# connected multigraphs with minimum degree >= 3 by cyclomatic number;
# links are vertex pairs, (v, v) is a loop
_BASES: dict[int, list[tuple[str, int, tuple[tuple[int, int], ...]]]] = {
    1: [("loop", 1, ((0, 0),))],
    2: [
        ("two_loops", 1, ((0, 0), (0, 0))),
        ("triple_link", 2, ((0, 1), (0, 1), (0, 1))),
        ("dumbbell", 2, ((0, 0), (0, 1), (1, 1))),
    ],
    3: [
        ("three_loops", 1, ((0, 0), (0, 0), (0, 0))),
        ("quad_link", 2, ((0, 1), (0, 1), (0, 1), (0, 1))),
        ("triple_link_loop", 2, ((0, 1), (0, 1), (0, 1), (0, 0))),
        ("double_link_loop_each", 2, ((0, 1), (0, 1), (0, 0), (1, 1))),
        ("bridge_heavy_loops", 2, ((0, 1), (0, 0), (0, 0), (1, 1))),
        ("triangle_two_doubles", 3, ((0, 1), (0, 1), (0, 2), (0, 2), (1, 2))),
        ("triple_link_tail_loop", 3, ((0, 1), (0, 1), (0, 1), (0, 2), (2, 2))),
        ("doubled_triangle_loop", 3, ((0, 1), (0, 1), (0, 2), (1, 2), (2, 2))),
        ("two_tail_loops", 3, ((0, 2), (0, 2), (1, 2), (0, 0), (1, 1))),
        ("path_three_loops", 3, ((1, 0), (0, 2), (0, 0), (1, 1), (2, 2))),
        ("k4", 4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))),
        ("domino", 4, ((0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (0, 3))),
        (
            "doubled_triangle_tail_loop",
            4,
            ((0, 1), (0, 1), (0, 2), (1, 2), (2, 3), (3, 3)),
        ),
        (
            "double_link_two_tail_loops",
            4,
            ((0, 1), (0, 1), (0, 2), (1, 3), (2, 2), (3, 3)),
        ),
        ("spider_three_loops", 4, ((0, 1), (0, 2), (0, 3), (1, 1), (2, 2), (3, 3))),
    ],
}


def _subdivision_tuples(
    links: Sequence[tuple[int, int]], budget: int
) -> Iterator[tuple[int, ...]]:
    """Subdivision counts per link keeping the result simple: loops get at
    least 2 interior vertices, parallel links at most one direct edge."""

    def rec(i: int, left: int, acc: list[int]):
        if i == len(links):
            yield tuple(acc)
            return
        u, v = links[i]
        lo = 2 if u == v else 0
        for s in range(lo, left + 1):
            if s == 0:
                direct = any(
                    links[j] == links[i] and acc[j] == 0 for j in range(i)
                )
                if direct:
                    continue
            acc.append(s)
            yield from rec(i + 1, left - s, acc)
            acc.pop()

    yield from rec(0, budget, [])


def _subdivide(
    k: int, links: Sequence[tuple[int, int]], subdiv: Sequence[int]
) -> list[tuple[int, int]]:
    edges = []
    nxt = k
    for (u, v), s in zip(links, subdiv):
        chain = [u] + list(range(nxt, nxt + s)) + [v]
        nxt += s
        edges.extend((chain[i], chain[i + 1]) for i in range(len(chain) - 1))
    return edges


@lru_cache(maxsize=None)
def _rooted_trees(size: int) -> tuple[tuple, ...]:
    """Canonical rooted tree shapes (sorted child tuples) on `size` vertices."""
    if size == 1:
        return ((),)
    shapes = []

    def rec(left: int, bound: tuple[int, int], acc: list):
        if left == 0:
            shapes.append(tuple(acc))
            return
        max_size = min(left, bound[0])
        for s in range(max_size, 0, -1):
            trees = _rooted_trees(s)
            start = bound[1] if s == bound[0] else len(trees) - 1
            for idx in range(start, -1, -1):
                acc.append(trees[idx])
                rec(left - s, (s, idx), acc)
                acc.pop()

    rec(size - 1, (size - 1, len(_rooted_trees(size - 1)) - 1), [])
    return tuple(shapes)


def _attach_tree(edges: list[tuple[int, int]], root: int, shape: tuple, nxt: int) -> int:
    for child in shape:
        edges.append((root, nxt))
        child_root = nxt
        nxt += 1
        nxt = _attach_tree(edges, child_root, child, nxt)
    return nxt


def _tree_assignments(k: int, budget: int) -> Iterator[tuple[tuple, ...]]:
    """All k-tuples of rooted tree shapes with total extra vertices <= budget."""

    def rec(i: int, left: int, acc: list):
        if i == k:
            yield tuple(acc)
            return
        for extra in range(left + 1):
            for shape in _rooted_trees(extra + 1):
                acc.append(shape)
                yield from rec(i + 1, left - extra, acc)
                acc.pop()

    yield from rec(0, budget, [])


def sparse_graphs(
    max_n: int, max_cyclomatic: int
) -> Iterator[tuple[int, list[tuple[int, int]]]]:
    """Connected graphs with a cycle, cyclomatic number <= max_cyclomatic
    and at most max_n vertices: every isomorphism class at least once
    (labeled duplicates possible).  Yields (n, sorted edge list)."""
    for c in range(1, max_cyclomatic + 1):
        for _, k, links in _BASES[c]:
            for subdiv in _subdivision_tuples(links, max_n - k):
                core_edges = _subdivide(k, links, subdiv)
                core_n = k + sum(subdiv)
                for shapes in _tree_assignments(core_n, max_n - core_n):
                    edges = list(core_edges)
                    nxt = core_n
                    for root, shape in enumerate(shapes):
                        nxt = _attach_tree(edges, root, shape, nxt)
                    yield nxt, sorted(edges)


@lru_cache(maxsize=4)
def _sparse_stream_cached(max_n: int, max_cyclomatic: int) -> list:
    return list(sparse_graphs(max_n, max_cyclomatic))


# ---------------------------------------------------------------------------
# graph6 input


class Graph6Error(ValueError):
    """Malformed graph6 data; `record` is the failing record's index."""

    def __init__(self, message: str, record: int):
        super().__init__(f"graph6 record {record}: {message}")
        self.record = record


def parse_graph6(text: str) -> list[tuple[int, list[tuple[int, int]]]]:
    """Decode graph6 records, one per line.  The optional '>>graph6<<'
    header and blank lines are skipped."""
    out = []
    index = 0
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith(">>graph6<<"):
            line = line[len(">>graph6<<"):]
            if not line:
                continue
        out.append(_decode_graph6_record(line, index))
        index += 1
    return out


def _decode_graph6_record(line: str, record: int) -> tuple[int, list[tuple[int, int]]]:
    data = [ord(ch) - 63 for ch in line]
    if any(x < 0 or x > 63 for x in data):
        raise Graph6Error("byte outside the printable graph6 range", record)
    if not data:
        raise Graph6Error("empty record", record)
    if data[0] < 63:
        n = data[0]
        body = data[1:]
    else:
        if len(data) >= 4 and data[1] < 63:
            n = (data[1] << 12) | (data[2] << 6) | data[3]
            body = data[4:]
        elif len(data) >= 8:
            n = 0
            for x in data[2:8]:
                n = (n << 6) | x
            body = data[8:]
        else:
            raise Graph6Error("truncated vertex count", record)
    if n > 15:
        raise Graph6Error(
            f"order {n} exceeds the exact batch kernel limit of 15", record
        )
    pairs = n * (n - 1) // 2
    need = (pairs + 5) // 6
    if len(body) != need:
        raise Graph6Error(
            f"expected {need} data characters for order {n}, got {len(body)}",
            record,
        )
    bits = []
    for x in body:
        bits.extend((x >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[pairs:]):
        raise Graph6Error("nonzero padding bits", record)
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return n, edges


@lru_cache(maxsize=None)
def _graph6_records_cached(path: str) -> list:
    with open(path) as fh:
        return parse_graph6(fh.read())


# ---------------------------------------------------------------------------
# structural typing for the sweep


def _bipartite_sides(n: int, edges: Sequence[tuple[int, int]]):
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return bipartition(adj), adj


def _is_complete_tripartite_masks(n: int, nbm: list[int]) -> bool:
    """Complete multipartite with exactly three parts, via vertex bitmasks."""
    full = (1 << n) - 1
    unassigned = full
    parts = []
    while unassigned:
        root = (unassigned & -unassigned).bit_length() - 1
        # complement component of root, grown over non-neighbors
        comp = 1 << root
        frontier = comp
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            grow = (~nbm[v]) & unassigned & ~comp & ~(1 << v) & full
            comp |= grow
            frontier |= grow
        unassigned &= ~comp
        parts.append(comp)
        if len(parts) > 3:
            return False
    if len(parts) != 3:
        return False
    for comp in parts:
        rest = comp
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            # independent inside the part, complete to the outside
            if nbm[v] != full & ~comp:
                return False
    return True


def _needs_per_signing_classify(
    n: int, degrees, m: int, c: int, sides, nbm: list[int]
) -> bool:
    """True when some signing of this underlying graph could be accepted by
    either classifier (cycles, complete bipartite, complete tripartite,
    unicyclic, theta(5,3,5)/(5,5,5), subdivided K4).  Everything else is
    bulk: no classifier case can match, so the expected accepted set is
    empty."""
    if c == 1:
        return True  # cycles and all other unicyclic shapes
    if sides is not None and m == len(sides[0]) * len(sides[1]):
        return True
    if _is_complete_tripartite_masks(n, nbm):
        return True
    if c == 2 and sorted(degrees)[-2:] == [3, 3] and n in (9, 11):
        probe = SignedGraph(n, [(u, v, 1) for u, v in _mask_pairs(nbm, n)])
        paths = _detect_theta(probe)
        if paths is not None and sorted(p for p, _, _ in paths) in (
            [3, 5, 5],
            [5, 5, 5],
        ):
            return True
    if c == 3 and n == 10 and m == 12:
        probe = SignedGraph(n, [(u, v, 1) for u, v in _mask_pairs(nbm, n)])
        if _detect_subdivided_k4(probe) is not None:
            return True
    return False


def _mask_pairs(nbm: list[int], n: int) -> list[tuple[int, int]]:
    return [
        (u, v) for u in range(n) for v in range(u + 1, n) if (nbm[u] >> v) & 1
    ]


# ---------------------------------------------------------------------------
# per-chunk engine


class _GraphMeta:
    __slots__ = (
        "source",
        "key",
        "n",
        "edges",
        "m",
        "girth",
        "cotree",
        "special",
        "bipartite",
    )

    def __init__(self, source, key, n, edges, m, girth, cotree, special, bipartite):
        self.source = source
        self.key = key
        self.n = n
        self.edges = edges
        self.m = m
        self.girth = girth
        self.cotree = cotree
        self.special = special
        self.bipartite = bipartite


class _Segment:
    __slots__ = ("meta", "j0", "count")

    def __init__(self, meta, j0, count):
        self.meta = meta
        self.j0 = j0
        self.count = count


def _instance_graph(meta: _GraphMeta, signing: int) -> SignedGraph:
    pos = {e: t for t, e in enumerate(meta.cotree)}
    signed = []
    for i, (u, v) in enumerate(meta.edges):
        s = -1 if i in pos and (signing >> pos[i]) & 1 else 1
        signed.append((u, v, s))
    return SignedGraph(meta.n, signed)


def _edges_compact(g: SignedGraph) -> str:
    return ",".join(
        f"{u}-{v}:{'+' if s > 0 else '-'}" for u, v, s in g.edges
    )


class _ChunkResult:
    def __init__(self):
        self.graphs = 0
        self.instances = 0
        self.checked: dict[str, int] = {}
        self.failures: dict[str, int] = {}
        self.counterexamples: list[dict] = []
        self.skipped_graph6_records = 0


class _Engine:
    def __init__(self, config: SweepConfig):
        self.config = config
        self.sel = set(config.checks)
        self.result = _ChunkResult()
        self.buffers: dict[int, list] = {}
        self.segments: dict[int, list[_Segment]] = {}
        self.buffered: dict[int, int] = {}
        self.ordinal = 0  # chunk-local instance counter for spot strides

    # -- accounting helpers

    def _count(self, name: str, amount: int = 1) -> None:
        self.result.checked[name] = self.result.checked.get(name, 0) + amount

    def _fail(self, name: str, meta: _GraphMeta, signing: int, rank_value, girth, detail="") -> None:
        res = self.result
        res.failures[name] = res.failures.get(name, 0) + 1
        if len(res.counterexamples) >= self.config.max_counterexamples:
            return
        g = _instance_graph(meta, signing)
        comment = f"{name} n={meta.n} girth={girth} rank={rank_value}"
        if detail:
            comment += f" ({detail})"
        res.counterexamples.append(
            {
                "check": name,
                "source": f"{meta.source}:{meta.key}",
                "n": meta.n,
                "m": meta.m,
                "girth": girth,
                "rank": int(rank_value),
                "signing_index": signing,
                "edges": _edges_compact(g),
                "sgr": write_sgr(g, comments=(comment,)),
            }
        )

    # -- graph intake

    def add_graph(self, source: str, key: int, n: int, edges: list[tuple[int, int]], girth_hint: int = 0) -> None:
        m = len(edges)
        degrees = [0] * n
        nbm = [0] * n
        for u, v in edges:
            degrees[u] += 1
            degrees[v] += 1
            nbm[u] |= 1 << v
            nbm[v] |= 1 << u
        c = m - n + 1
        sides, adj = _bipartite_sides(n, edges)
        girth = girth_hint or girth_of_adjacency(adj)
        special = _needs_per_signing_classify(n, degrees, m, c, sides, nbm)
        cotree = _spanning_cotree(n, edges)
        meta = _GraphMeta(
            source, key, n, edges, m, girth, cotree, special, sides is not None
        )
        self.result.graphs += 1
        total = 1 << len(cotree)
        self.result.instances += total
        for j0 in range(0, total, _SIGNING_BLOCK):
            count = min(_SIGNING_BLOCK, total - j0)
            self._append_block(meta, j0, count)

    def _append_block(self, meta: _GraphMeta, j0: int, count: int) -> None:
        n = meta.n
        base = np.zeros((n, n), dtype=np.int8)
        for u, v in meta.edges:
            base[u, v] = 1
            base[v, u] = 1
        block = np.repeat(base[None, :, :], count, axis=0)
        js = np.arange(j0, j0 + count, dtype=np.int64)
        for t, e in enumerate(meta.cotree):
            u, v = meta.edges[e]
            s = (1 - 2 * ((js >> t) & 1)).astype(np.int8)
            block[:, u, v] = s
            block[:, v, u] = s
        self.buffers.setdefault(n, []).append(block)
        self.segments.setdefault(n, []).append(_Segment(meta, j0, count))
        self.buffered[n] = self.buffered.get(n, 0) + count
        if self.buffered[n] >= _BUFFER_INSTANCES:
            self._flush(n)

    def finish(self) -> _ChunkResult:
        for n in sorted(self.buffers):
            if self.buffered.get(n, 0):
                self._flush(n)
        return self.result

    # -- the checks

    def _flush(self, n: int) -> None:
        blocks = self.buffers.pop(n, [])
        segments = self.segments.pop(n, [])
        self.buffered[n] = 0
        if not blocks:
            return
        stack = np.concatenate(blocks, axis=0) if len(blocks) > 1 else blocks[0]
        ranks = batch_ranks(stack)
        counts = np.array([seg.count for seg in segments], dtype=np.int64)
        starts = np.concatenate(([0], np.cumsum(counts)))
        total = int(starts[-1])
        garr = np.repeat(
            np.array([seg.meta.girth for seg in segments], dtype=np.int64), counts
        )
        special = np.repeat(
            np.array([seg.meta.special for seg in segments], dtype=bool), counts
        )
        sel = self.sel

        def seg_at(pos: int) -> tuple[_Segment, int]:
            i = int(np.searchsorted(starts, pos, side="right")) - 1
            seg = segments[i]
            return seg, seg.j0 + (pos - int(starts[i]))

        def report(name, pos, detail=""):
            seg, signing = seg_at(pos)
            self._fail(
                name, seg.meta, signing, int(ranks[pos]), seg.meta.girth, detail
            )

        if "rank_ge_girth_minus_2" in sel:
            self._count("rank_ge_girth_minus_2", total)
            for pos in np.nonzero(ranks < garr - 2)[0].tolist():
                report("rank_ge_girth_minus_2", pos)
        if "rank_ne_girth_minus_1" in sel:
            self._count("rank_ne_girth_minus_1", total)
            for pos in np.nonzero(ranks == garr - 1)[0].tolist():
                report("rank_ne_girth_minus_1", pos)
        if "rank_ge_girth_minus_1" in sel:
            self._count("rank_ge_girth_minus_1", total)
            for pos in np.nonzero(ranks < garr - 1)[0].tolist():
                report("rank_ge_girth_minus_1", pos, "expected self-test failure")

        check_gm2 = "girth_minus_2_iff_classified" in sel
        check_eqg = "equals_girth_iff_classified" in sel
        if check_gm2:
            self._count("girth_minus_2_iff_classified", total)
            bulk_bad = (ranks == garr - 2) & ~special
            for pos in np.nonzero(bulk_bad)[0].tolist():
                report(
                    "girth_minus_2_iff_classified",
                    pos,
                    "rank girth-2 outside the classified families",
                )
        if check_eqg:
            self._count("equals_girth_iff_classified", total)
            bulk_bad = (ranks == garr) & ~special & (garr != 4)
            for pos in np.nonzero(bulk_bad)[0].tolist():
                report(
                    "equals_girth_iff_classified",
                    pos,
                    "rank == girth outside the classified families",
                )
        if check_gm2 or check_eqg:
            self._classify_special(segments, starts, ranks, check_gm2, check_eqg)

        if "girth_four_consequences" in sel:
            hits = np.nonzero((garr == 4) & (ranks == 4))[0]
            self._count("girth_four_consequences", len(hits))
            for pos in hits.tolist():
                seg, signing = seg_at(pos)
                if not seg.meta.bipartite:
                    report(
                        "girth_four_consequences", pos, "underlying graph not bipartite"
                    )
                    continue
                g = _instance_graph(seg.meta, signing)
                reduced = reduced_graph(g)
                r_red = exact_rank(adjacency_matrix(reduced)).rank
                if r_red != 4:
                    report(
                        "girth_four_consequences",
                        pos,
                        f"twin-reduced rank {r_red} != 4",
                    )

        if "spot_check_exact_rank" in sel or "spot_check_classifier" in sel:
            self._spot_checks(segments, starts, ranks, garr, total)

        self._instance_checks(segments, starts, ranks, total)
        self.ordinal += total

    def _classify_special(self, segments, starts, ranks, check_gm2, check_eqg):
        for i, seg in enumerate(segments):
            if not seg.meta.special:
                continue
            meta = seg.meta
            base = int(starts[i])
            for off in range(seg.count):
                signing = seg.j0 + off
                rank_value = int(ranks[base + off])
                g = _instance_graph(meta, signing)
                if check_gm2:
                    got = classify_gminus2(g) is not None
                    want = rank_value == meta.girth - 2
                    if got != want:
                        self._fail(
                            "girth_minus_2_iff_classified",
                            meta,
                            signing,
                            rank_value,
                            meta.girth,
                            f"classifier={'hit' if got else 'miss'}",
                        )
                if check_eqg:
                    got = (
                        classify_equals_g(g, rank=rank_value) is not None
                    )
                    want = rank_value == meta.girth
                    if got != want:
                        self._fail(
                            "equals_girth_iff_classified",
                            meta,
                            signing,
                            rank_value,
                            meta.girth,
                            f"classifier={'hit' if got else 'miss'}",
                        )

    def _spot_checks(self, segments, starts, ranks, garr, total):
        do_rank = "spot_check_exact_rank" in self.sel
        do_cls = "spot_check_classifier" in self.sel
        base = self.ordinal
        if do_rank:
            first = (-base) % _SPOT_RANK_STRIDE
            for pos in range(first, total, _SPOT_RANK_STRIDE):
                self._count("spot_check_exact_rank")
                seg, signing = self._seg_signing(segments, starts, pos)
                g = _instance_graph(seg.meta, signing)
                r = exact_rank(adjacency_matrix(g)).rank
                if r != int(ranks[pos]):
                    self._fail(
                        "spot_check_exact_rank",
                        seg.meta,
                        signing,
                        int(ranks[pos]),
                        seg.meta.girth,
                        f"fraction-free rank {r}",
                    )
        if do_cls:
            first = (-base) % _SPOT_CLASSIFY_STRIDE
            for pos in range(first, total, _SPOT_CLASSIFY_STRIDE):
                self._count("spot_check_classifier")
                seg, signing = self._seg_signing(segments, starts, pos)
                meta = seg.meta
                g = _instance_graph(meta, signing)
                rank_value = int(ranks[pos])
                gm2 = classify_gminus2(g) is not None
                eqg = classify_equals_g(g, rank=rank_value) is not None
                ok = (gm2 == (rank_value == meta.girth - 2)) and (
                    eqg == (rank_value == meta.girth)
                )
                if not ok:
                    self._fail(
                        "spot_check_classifier",
                        meta,
                        signing,
                        rank_value,
                        meta.girth,
                        f"gm2={gm2} eqg={eqg}",
                    )

    def _seg_signing(self, segments, starts, pos):
        i = int(np.searchsorted(starts, pos, side="right")) - 1
        seg = segments[i]
        return seg, seg.j0 + (pos - int(starts[i]))

    def _instance_checks(self, segments, starts, ranks, total):
        names = [
            name
            for name in self.sel
            if CHECKS[name].kind == "instance"
        ]
        if not names:
            return
        for i, seg in enumerate(segments):
            meta = seg.meta
            base = int(starts[i])
            for off in range(seg.count):
                signing = seg.j0 + off
                rank_value = int(ranks[base + off])
                g = _instance_graph(meta, signing)
                rng = random.Random((meta.key * 1000003 + signing) & 0xFFFFFFFF)
                for name in names:
                    applicable, ok, detail = _run_instance_check(
                        name, g, meta, rank_value, rng
                    )
                    if applicable:
                        self._count(name)
                        if not ok:
                            self._fail(
                                name, meta, signing, rank_value, meta.girth, detail
                            )


def _run_instance_check(name, g, meta, rank_value, rng):
    if name == "pendant_identity":
        deg = g.degrees()
        pend = next((v for v in range(g.n) if deg[v] == 1), None)
        if pend is None:
            return False, True, ""
        nb = g.neighbors()[pend][0]
        keep = [v for v in range(g.n) if v not in (pend, nb)]
        if not keep:
            return False, True, ""
        sub = induced_subgraph(g, keep)
        r_sub = exact_rank(adjacency_matrix(sub)).rank
        ok = rank_value == r_sub + 2
        return True, ok, f"sub rank {r_sub}"
    if name == "vertex_deletion_bounds":
        v = rng.randrange(g.n)
        keep = [u for u in range(g.n) if u != v]
        sub = induced_subgraph(g, keep)
        r_sub = exact_rank(adjacency_matrix(sub)).rank
        ok = r_sub <= rank_value <= r_sub + 2
        return True, ok, f"deleted {v}, sub rank {r_sub}"
    if name == "nullity_cyclomatic_bound":
        deg = g.degrees()
        if all(d == 2 for d in deg):
            return False, True, ""
        pend = sum(1 for d in deg if d == 1)
        c = g.m - g.n + 1
        ok = g.n - rank_value <= pend + 2 * c - 1
        return True, ok, f"nullity {g.n - rank_value} bound {pend + 2 * c - 1}"
    if name == "outside_vertex_girth":
        witness = set(shortest_cycle(g).vertices)
        nb = g.neighbors()
        crowded = [
            v
            for v in range(g.n)
            if v not in witness and sum(1 for u in nb[v] if u in witness) >= 2
        ]
        if not crowded:
            return False, True, ""
        return True, meta.girth <= 4, f"vertex {crowded[0]} sees the cycle twice"
    if name == "switching_invariance":
        subset = [v for v in range(g.n) if rng.random() < 0.5]
        r = exact_rank(adjacency_matrix(switch(g, subset))).rank
        return True, r == rank_value, f"switched rank {r}"
    if name == "twin_deletion_rank":
        if not find_twins(g):
            return False, True, ""
        r = exact_rank(adjacency_matrix(reduced_graph(g))).rank
        return True, r == rank_value, f"reduced rank {r}"
    raise AssertionError(f"unhandled instance check {name}")


# ---------------------------------------------------------------------------
# chunking and the driver


def _plan_chunks(config: SweepConfig) -> list[tuple]:
    chunks: list[tuple] = []
    for n in range(3, config.max_n_dense + 1):
        total = 1 << len(_edge_table(n))
        for lo in range(0, total, _DENSE_CHUNK_MASKS):
            chunks.append(("dense", n, lo, min(lo + _DENSE_CHUNK_MASKS, total)))
    if config.max_n_sparse >= 3:
        stream_len = len(
            _sparse_stream_cached(config.max_n_sparse, config.max_cyclomatic)
        )
        for lo in range(0, stream_len, _SPARSE_CHUNK_GRAPHS):
            chunks.append(("sparse", lo, min(lo + _SPARSE_CHUNK_GRAPHS, stream_len)))
    for pi, path in enumerate(config.graph6_paths):
        records = _graph6_records_cached(path)
        for lo in range(0, len(records), _GRAPH6_CHUNK_RECORDS):
            chunks.append(
                ("graph6", pi, lo, min(lo + _GRAPH6_CHUNK_RECORDS, len(records)))
            )
    return chunks


def _run_chunk(config: SweepConfig, desc: tuple) -> _ChunkResult:
    engine = _Engine(config)
    if desc[0] == "dense":
        _, n, lo, hi = desc
        masks, _, hints = _dense_chunk(n, lo, hi)
        for mask, hint in zip(masks.tolist(), hints.tolist()):
            engine.add_graph("dense", mask, n, _mask_edges(n, mask), hint)
    elif desc[0] == "sparse":
        _, lo, hi = desc
        stream = _sparse_stream_cached(config.max_n_sparse, config.max_cyclomatic)
        for key in range(lo, hi):
            n, edges = stream[key]
            engine.add_graph("sparse", key, n, edges)
    else:
        _, pi, lo, hi = desc
        records = _graph6_records_cached(config.graph6_paths[pi])
        for key in range(lo, hi):
            n, edges = records[key]
            adj = [[] for _ in range(n)]
            for u, v in edges:
                adj[u].append(v)
                adj[v].append(u)
            connected = n > 0 and len(
                _component(adj, 0)
            ) == n
            if not connected or len(edges) < n:
                engine.result.skipped_graph6_records += 1
                continue
            engine.add_graph(f"graph6[{pi}]", key, n, edges)
    return engine.finish()


def _component(adj, root):
    seen = {root}
    stack = [root]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def _run_chunk_star(args):
    return _run_chunk(*args)


def run(config: SweepConfig) -> SweepReport:
    """Run the configured sweep and aggregate a deterministic report
    (identical for any `jobs` value, up to elapsed time)."""
    config.validate()
    start = time.monotonic()
    chunks = _plan_chunks(config)
    report = SweepReport(config=config)
    if config.jobs == 1 or len(chunks) <= 1:
        results = (_run_chunk(config, desc) for desc in chunks)
        for res in results:
            _merge(report, res)
    else:
        ctx = get_context("fork")
        with ctx.Pool(config.jobs) as pool:
            for res in pool.imap(
                _run_chunk_star, [(config, d) for d in chunks], chunksize=1
            ):
                _merge(report, res)
    cap = config.max_counterexamples
    report.counterexamples = report.counterexamples[:cap]
    report.elapsed_seconds = time.monotonic() - start
    return report


def _merge(report: SweepReport, res: _ChunkResult) -> None:
    report.graphs += res.graphs
    report.instances += res.instances
    report.skipped_graph6_records += res.skipped_graph6_records
    for name, count in res.checked.items():
        report.checked[name] = report.checked.get(name, 0) + count
    for name, count in res.failures.items():
        report.failures[name] = report.failures.get(name, 0) + count
    report.counterexamples.extend(res.counterexamples)
