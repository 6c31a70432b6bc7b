"""Shared helpers for the test suite."""

import random

from sgrank import SignedGraph, adjacency_matrix, rank


def rank_of(g: SignedGraph) -> int:
    return rank(adjacency_matrix(g)).rank


def random_connected_graph(rng: random.Random, n: int,
                           extra: float = 0.3) -> SignedGraph:
    """Random spanning tree plus extra edges, random signs."""
    edges = []
    for v in range(1, n):
        u = rng.randrange(v)
        edges.append((u, v, rng.choice((1, -1))))
    present = {(u, v) for u, v, _ in edges}
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in present and rng.random() < extra:
                edges.append((u, v, rng.choice((1, -1))))
    return SignedGraph(n, edges)


def random_cyclic_graph(rng: random.Random, n: int,
                        extra: float = 0.3) -> SignedGraph:
    """Like random_connected_graph but guaranteed to contain a cycle."""
    while True:
        g = random_connected_graph(rng, max(n, 3), extra)
        if g.m > g.n - 1:
            return g


def random_symmetric_matrix(rng: random.Random, n: int) -> list[list[int]]:
    mat = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            mat[i][j] = mat[j][i] = rng.choice((-1, 0, 1))
    return mat
