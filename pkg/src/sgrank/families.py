"""Parameterized signed-graph families with known exact ranks.

Each spec dataclass describes one family member; `generate` builds the
labeled signed graph deterministically and `expected_rank` returns the
closed-form rank where one exists (None otherwise).

Closed forms used:
  * path on n vertices: n-1 if n is odd else n
  * cycle on n: balanced -> n-2 if n % 4 == 0 else n;
               unbalanced -> n-2 if n % 4 == 2 else n
  * balanced complete bipartite: 2
  * three-part clone-structured signings of complete tripartite graphs: 3
  * theta graphs with all three path orders even: full rank (nonsingular
    for every signing)
  * theta(5,3,5) with both 6-cycles negative: 6; theta(5,5,5) balanced: 8
  * the subdivided-K4 graph with all four 6-cycles negative: 6
  * cycle with pendant leaf stars on cycle vertices: 2k + sum of gap path
    ranks (delete each star's leaf+center pendant pair, 2 per star)
  * cycle joined to an off-cycle star center: 2 + cycle rank
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence, Union

from .core import SignedGraph


@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int
    balanced: bool = True


@dataclass(frozen=True)
class BalancedCompleteBipartite:
    a: int
    b: int


@dataclass(frozen=True)
class TripartiteRank3:
    """Complete tripartite underlying graph signed as
    sign(u, v) = polarity(u) * polarity(v) * pair_sign(part(u), part(v)).

    These are exactly the rank-3 signed graphs: per part, every vertex's
    positive/negative neighborhood pair either matches the part's first
    vertex or is exactly swapped.
    """

    sizes: tuple[int, int, int]
    polarities: tuple[int, ...] = ()
    pair_signs: tuple[int, int, int] = (1, 1, 1)


@dataclass(frozen=True)
class CanonicalUnicyclic:
    """Cycle of length `cycle_length` with a pendant star at each position in
    `stars` (position -> number of leaves, at least 1)."""

    cycle_length: int
    stars: Mapping[int, int] = None  # type: ignore[assignment]

    def __post_init__(self):
        object.__setattr__(
            self, "stars", dict(self.stars) if self.stars else {}
        )

    def __hash__(self):
        return hash((self.cycle_length, tuple(sorted(self.stars.items()))))

    def __eq__(self, other):
        return (
            isinstance(other, CanonicalUnicyclic)
            and self.cycle_length == other.cycle_length
            and dict(self.stars) == dict(other.stars)
        )


@dataclass(frozen=True)
class Theta:
    """Two branch vertices joined by three internally disjoint paths of
    orders p, l, q (each >= 2, at most one equal to 2).

    Vertex labels: branch vertices 0 and 1 first, then the interior
    vertices of the p-, l- and q-paths in that order.  `signs`, when given,
    assigns edge signs in the graph's sorted edge order.
    """

    p: int
    l: int
    q: int
    signs: Optional[tuple[int, ...]] = None


@dataclass(frozen=True)
class SubdividedK4:
    """K4 with every edge subdivided once: the 6-cycle 0..5 plus length-2
    paths from vertices 0, 2, 4 through 6, 7, 8 to a common apex 9
    (n=10, m=12, girth 6, four 6-cycles).

    `signs`, when given, assigns edge signs in sorted edge order.
    """

    signs: Optional[tuple[int, ...]] = None


@dataclass(frozen=True)
class CycleStar:
    """Cycle of length `cycle_length` whose vertex 0 is joined to the center
    of a star with `leaves` >= 1 leaves; the center sits off the cycle."""

    cycle_length: int
    leaves: int
    balanced: bool = True


FamilySpec = Union[
    Path,
    Cycle,
    BalancedCompleteBipartite,
    TripartiteRank3,
    CanonicalUnicyclic,
    Theta,
    SubdividedK4,
    CycleStar,
]


def _path_rank(n: int) -> int:
    return n - 1 if n % 2 else n


def _cycle_rank(n: int, balanced: bool) -> int:
    if balanced:
        return n - 2 if n % 4 == 0 else n
    return n - 2 if n % 4 == 2 else n


def _cycle_edges(n: int, balanced: bool, offset: int = 0) -> list[tuple[int, int, int]]:
    # the canonical unbalanced signing puts one negative sign on the
    # lexicographically last cycle edge (n-2, n-1)
    edges = []
    for i in range(n):
        u, v = i + offset, (i + 1) % n + offset
        if u > v:
            u, v = v, u
        edges.append((u, v, 1))
    if not balanced:
        edges.sort()
        u, v, _ = edges[-1]
        edges[-1] = (u, v, -1)
    return edges


def _apply_signs(n: int, plain_edges: Sequence[tuple[int, int]], signs) -> SignedGraph:
    ordered = sorted((min(u, v), max(u, v)) for u, v in plain_edges)
    if signs is None:
        return SignedGraph(n, [(u, v, 1) for u, v in ordered])
    if len(signs) != len(ordered):
        raise ValueError(f"expected {len(ordered)} signs, got {len(signs)}")
    if any(s not in (1, -1) for s in signs):
        raise ValueError("signs must be +-1")
    return SignedGraph(n, [(u, v, s) for (u, v), s in zip(ordered, signs)])


def _theta_plain_edges(p: int, l: int, q: int) -> tuple[int, list[tuple[int, int]]]:
    for value in (p, l, q):
        if value < 2:
            raise ValueError("theta path orders must be at least 2")
    if sum(1 for value in (p, l, q) if value == 2) > 1:
        raise ValueError("at most one theta path may have order 2")
    n = p + l + q - 4
    edges = []
    nxt = 2
    for order in (p, l, q):
        interior = list(range(nxt, nxt + order - 2))
        nxt += order - 2
        chain = [0] + interior + [1]
        edges.extend((chain[i], chain[i + 1]) for i in range(len(chain) - 1))
    return n, edges


_SUBDIVIDED_K4_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5),  # the 6-cycle
    (0, 6), (2, 7), (4, 8),                          # spokes
    (6, 9), (7, 9), (8, 9),                          # apex
]


def subdivided_k4_all_negative_six_cycle_signs() -> tuple[int, ...]:
    """A sign assignment (sorted edge order) making all four 6-cycles negative:
    negate the alternating cycle edges (0,1), (2,3), (4,5)."""
    ordered = sorted(_SUBDIVIDED_K4_EDGES)
    negative = {(0, 1), (2, 3), (4, 5)}
    return tuple(-1 if e in negative else 1 for e in ordered)


def generate(spec: FamilySpec) -> SignedGraph:
    """Deterministically build the labeled signed graph for `spec`."""
    if isinstance(spec, Path):
        if spec.n < 1:
            raise ValueError("path needs at least one vertex")
        return SignedGraph(spec.n, [(i, i + 1, 1) for i in range(spec.n - 1)])

    if isinstance(spec, Cycle):
        if spec.n < 3:
            raise ValueError("cycle needs at least three vertices")
        return SignedGraph(spec.n, _cycle_edges(spec.n, spec.balanced))

    if isinstance(spec, BalancedCompleteBipartite):
        if spec.a < 1 or spec.b < 1:
            raise ValueError("both sides must be nonempty")
        edges = [
            (i, spec.a + j, 1) for i in range(spec.a) for j in range(spec.b)
        ]
        return SignedGraph(spec.a + spec.b, edges)

    if isinstance(spec, TripartiteRank3):
        a, b, c = spec.sizes
        if min(a, b, c) < 1:
            raise ValueError("all three parts must be nonempty")
        n = a + b + c
        pol = spec.polarities or tuple([1] * n)
        if len(pol) != n or any(x not in (1, -1) for x in pol):
            raise ValueError("polarities must be +-1, one per vertex")
        if any(x not in (1, -1) for x in spec.pair_signs):
            raise ValueError("pair_signs must be +-1")
        part = [0] * a + [1] * b + [2] * c
        tau = {
            (0, 1): spec.pair_signs[0],
            (0, 2): spec.pair_signs[1],
            (1, 2): spec.pair_signs[2],
        }
        edges = []
        for u in range(n):
            for v in range(u + 1, n):
                if part[u] != part[v]:
                    key = (min(part[u], part[v]), max(part[u], part[v]))
                    edges.append((u, v, pol[u] * pol[v] * tau[key]))
        return SignedGraph(n, edges)

    if isinstance(spec, CanonicalUnicyclic):
        length = spec.cycle_length
        if length < 3:
            raise ValueError("cycle needs at least three vertices")
        edges = _cycle_edges(length, balanced=True)
        nxt = length
        for pos in sorted(spec.stars):
            leaves = spec.stars[pos]
            if not (0 <= pos < length):
                raise ValueError(f"star position {pos} not on the cycle")
            if leaves < 1:
                raise ValueError("each star needs at least one leaf")
            for _ in range(leaves):
                edges.append((pos, nxt, 1))
                nxt += 1
        return SignedGraph(nxt, edges)

    if isinstance(spec, Theta):
        n, plain = _theta_plain_edges(spec.p, spec.l, spec.q)
        return _apply_signs(n, plain, spec.signs)

    if isinstance(spec, SubdividedK4):
        return _apply_signs(10, _SUBDIVIDED_K4_EDGES, spec.signs)

    if isinstance(spec, CycleStar):
        length, k = spec.cycle_length, spec.leaves
        if length < 3:
            raise ValueError("cycle needs at least three vertices")
        if k < 1:
            raise ValueError("star needs at least one leaf")
        edges = _cycle_edges(length, spec.balanced)
        center = length
        edges.append((0, center, 1))
        edges.extend((center, center + 1 + i, 1) for i in range(k))
        return SignedGraph(length + k + 1, edges)

    raise TypeError(f"unknown family spec: {spec!r}")


def _theta_path_sign_products(spec: Theta) -> list[tuple[int, int]]:
    """(order, product of the path's edge signs) for the three theta paths."""
    g = generate(spec)
    signs = g.sign_map()
    out = []
    nxt = 2
    for order in (spec.p, spec.l, spec.q):
        interior = list(range(nxt, nxt + order - 2))
        nxt += order - 2
        chain = [0] + interior + [1]
        prod = 1
        for i in range(len(chain) - 1):
            u, v = chain[i], chain[i + 1]
            prod *= signs[(min(u, v), max(u, v))]
        out.append((order, prod))
    return out


def expected_rank(spec: FamilySpec) -> Optional[int]:
    """Closed-form exact rank, or None when no formula applies."""
    if isinstance(spec, Path):
        return _path_rank(spec.n)

    if isinstance(spec, Cycle):
        return _cycle_rank(spec.n, spec.balanced)

    if isinstance(spec, BalancedCompleteBipartite):
        return 2

    if isinstance(spec, TripartiteRank3):
        return 3

    if isinstance(spec, CanonicalUnicyclic):
        length = spec.cycle_length
        centers = sorted(spec.stars)
        if not centers:
            return _cycle_rank(length, balanced=True)
        total = 2 * len(centers)
        for i, pos in enumerate(centers):
            nxt = centers[(i + 1) % len(centers)]
            gap = (nxt - pos - 1) % length if len(centers) > 1 else length - 1
            total += _path_rank(gap) if gap else 0
        return total

    if isinstance(spec, Theta):
        n = spec.p + spec.l + spec.q - 4
        if spec.p % 2 == 0 and spec.l % 2 == 0 and spec.q % 2 == 0:
            return n  # nonsingular for every sign assignment
        prods = _theta_path_sign_products(spec)
        orders = sorted(order for order, _ in prods)
        if orders == [3, 5, 5]:
            # the two 6-cycles pair the order-3 path with each order-5 path
            s3 = [prod for order, prod in prods if order == 3][0]
            fives = [prod for order, prod in prods if order == 5]
            if s3 * fives[0] == -1 and s3 * fives[1] == -1:
                return 6
            return None
        if orders == [5, 5, 5]:
            s = [prod for _, prod in prods]
            if s[0] * s[1] == 1 and s[1] * s[2] == 1:  # balanced
                return 8
            return None
        return None

    if isinstance(spec, SubdividedK4):
        g = generate(spec)
        signs = g.sign_map()
        base = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]
        spoke = {0: [(0, 6), (6, 9)], 2: [(2, 7), (7, 9)], 4: [(4, 8), (8, 9)]}
        cycles = [list(base)]
        for a, b in ((0, 2), (2, 4), (4, 0)):
            # two consecutive cycle edges from a to b plus both spoke paths
            arc = [(4, 5), (0, 5)] if (a, b) == (4, 0) else [(a, a + 1), (a + 1, b)]
            cycles.append(arc + spoke[a] + spoke[b])
        prods = []
        for cyc in cycles:
            prod = 1
            for u, v in cyc:
                prod *= signs[(min(u, v), max(u, v))]
            prods.append(prod)
        if all(p == -1 for p in prods):
            return 6
        return None

    if isinstance(spec, CycleStar):
        return 2 + _cycle_rank(spec.cycle_length, spec.balanced)

    raise TypeError(f"unknown family spec: {spec!r}")
