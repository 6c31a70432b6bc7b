"""Structural invariants of signed graphs.

Girth is computed by the classical BFS-from-every-root scan: for a root r,
any non-tree edge (u, v) met during BFS closes a walk of length
d(u) + d(v) + 1 through r which contains a cycle no longer than that, and
for a root lying on a shortest cycle the scan attains the girth exactly, so
the minimum over all roots is the girth.

Balance uses spanning-forest potentials: assign each vertex the product of
edge signs on its tree path from the root; the graph is balanced iff every
non-tree edge sign equals the product of its endpoint potentials
(equivalently, iff every cycle is positive).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import SignedGraph


@dataclass(frozen=True)
class InvariantProfile:
    components: int
    cyclomatic: int
    pendant_count: int
    bipartite: bool
    girth: int | None
    balanced: bool


@dataclass(frozen=True)
class CycleRecord:
    """A simple cycle in canonical form: minimal vertex first, then its
    smaller neighbor on the cycle (fixes rotation and reflection)."""

    vertices: tuple[int, ...]
    length: int
    sign: int


def connected_components(adj: list[list[int]]) -> list[list[int]]:
    """Vertex lists of the connected components, lowest vertex first."""
    n = len(adj)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        out.append(sorted(comp))
    return out


def is_connected(g: SignedGraph) -> bool:
    if g.n <= 1:
        return True
    return len(connected_components(g.neighbors())) == 1


def girth_of_adjacency(adj: list[list[int]]) -> int | None:
    """Length of a shortest cycle, or None for a forest."""
    n = len(adj)
    best: int | None = None
    dist = [0] * n
    parent = [0] * n
    for root in range(n):
        for i in range(n):
            dist[i] = -1
        dist[root] = 0
        parent[root] = -1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                continue
            du = dist[u]
            for v in adj[u]:
                if dist[v] < 0:
                    dist[v] = du + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u]:
                    cand = du + dist[v] + 1
                    if best is None or cand < best:
                        best = cand
    return best


def bipartition(adj: list[list[int]]) -> tuple[list[int], list[int]] | None:
    """A 2-coloring as (side0, side1), or None if an odd cycle exists."""
    n = len(adj)
    color = [-1] * n
    for start in range(n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    return (
        [v for v in range(n) if color[v] == 0],
        [v for v in range(n) if color[v] == 1],
    )


def switching_potentials(g: SignedGraph) -> list[int]:
    """Per-vertex +-1 potentials from BFS forests (roots get +1).

    Switching by {v: potential == -1} makes every forest edge positive.
    """
    adj = g.neighbors()
    signs = g.sign_map()
    pot = [0] * g.n
    for root in range(g.n):
        if pot[root]:
            continue
        pot[root] = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if not pot[v]:
                    pot[v] = pot[u] * signs[(min(u, v), max(u, v))]
                    queue.append(v)
    return pot


def is_balanced(g: SignedGraph) -> bool:
    """True iff every cycle has positive sign."""
    pot = switching_potentials(g)
    return all(s == pot[u] * pot[v] for u, v, s in g.edges)


def profile(g: SignedGraph) -> InvariantProfile:
    """All cheap invariants in one pass-friendly bundle."""
    adj = g.neighbors()
    comps = connected_components(adj)
    deg = g.degrees()
    return InvariantProfile(
        components=len(comps),
        cyclomatic=g.m - g.n + len(comps),
        pendant_count=sum(1 for d in deg if d == 1),
        bipartite=bipartition(adj) is not None,
        girth=girth_of_adjacency(adj),
        balanced=is_balanced(g),
    )


def cycle_sign(g: SignedGraph, vertices: tuple[int, ...]) -> int:
    """Sign (product of edge signs) of the cycle visiting `vertices` in order."""
    k = len(vertices)
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    if len(set(vertices)) != k:
        raise ValueError("cycle vertices must be distinct")
    signs = g.sign_map()
    total = 1
    for i in range(k):
        u, v = vertices[i], vertices[(i + 1) % k]
        key = (min(u, v), max(u, v))
        if key not in signs:
            raise ValueError(f"({u},{v}) is not an edge")
        total *= signs[key]
    return total


def _canonical_cycle(seq: list[int]) -> tuple[int, ...]:
    k = len(seq)
    start = seq.index(min(seq))
    rotated = seq[start:] + seq[:start]
    if rotated[1] > rotated[-1]:
        rotated = [rotated[0]] + rotated[1:][::-1]
    return tuple(rotated)


def cycles_up_to(g: SignedGraph, max_length: int) -> list[CycleRecord]:
    """Every simple cycle of length <= max_length, once, in canonical form.

    Enumeration is exponential in general; intended for small graphs
    (n <= 16 or so).  Output is sorted by (length, vertex tuple).
    """
    adj = g.neighbors()
    found: list[CycleRecord] = []
    path: list[int] = []
    on_path = [False] * g.n

    def extend(start: int, u: int) -> None:
        for v in adj[u]:
            if v == start and len(path) >= 3:
                if path[1] < path[-1]:  # each cycle once, not twice reversed
                    seq = _canonical_cycle(list(path))
                    found.append(CycleRecord(seq, len(seq), cycle_sign(g, seq)))
                continue
            if v <= start or on_path[v]:
                continue
            if len(path) == max_length:
                continue
            path.append(v)
            on_path[v] = True
            extend(start, v)
            on_path[v] = False
            path.pop()

    if max_length >= 3:
        for s in range(g.n):
            path = [s]
            on_path[s] = True
            extend(s, s)
            on_path[s] = False
    found.sort(key=lambda rec: (rec.length, rec.vertices))
    return found


def shortest_cycle(g: SignedGraph) -> CycleRecord | None:
    """A shortest cycle with a deterministic witness, or None for forests.

    Tie-break: lowest BFS root that attains the girth, then the
    lexicographically smallest canonical vertex sequence at that root.
    """
    adj = g.neighbors()
    g_len = girth_of_adjacency(adj)
    if g_len is None:
        return None
    n = g.n
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = deque([root])
        candidates = []
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u] and dist[u] + dist[v] + 1 == g_len:
                    candidates.append((u, v))
        best: tuple[int, ...] | None = None
        for u, v in candidates:
            path_u = []
            x = u
            while x != -1:
                path_u.append(x)
                x = parent[x]
            path_v = []
            x = v
            while x != -1:
                path_v.append(x)
                x = parent[x]
            # at girth length the two tree paths share only the root
            if set(path_u) & set(path_v) != {root}:
                continue
            seq = _canonical_cycle(path_u[::-1] + path_v[:-1])
            if len(seq) == g_len and (best is None or seq < best):
                best = seq
        if best is not None:
            return CycleRecord(best, len(best), cycle_sign(g, best))
    raise AssertionError("girth found but no witness cycle; BFS invariant broken")
