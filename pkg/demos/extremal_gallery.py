"""A gallery of the extremal signed graphs for the girth bounds.

A connected signed graph with girth g always has rank at least g-2 and
never exactly g-1.  The graphs attaining rank g-2 form three families;
those attaining rank g form eight cases.  This script builds one member
of every family, prints its invariants and runs the classifiers on it.

Run:  python3 demos/extremal_gallery.py
"""

from sgrank import (
    BalancedCompleteBipartite,
    CanonicalUnicyclic,
    Cycle,
    CycleStar,
    SignedGraph,
    SubdividedK4,
    Theta,
    TripartiteRank3,
    adjacency_matrix,
    classify_equals_g,
    classify_gminus2,
    generate,
    profile,
    rank,
    subdivided_k4_all_negative_six_cycle_signs,
)


def theta_535_negative_cycles() -> SignedGraph:
    """theta(5,3,5) with one middle edge flipped: both 6-cycles negative."""
    g = generate(Theta(5, 3, 5))
    deg = g.degrees()
    branches = {v for v in range(g.n) if deg[v] == 3}
    nbrs = g.neighbors()
    middle = next(v for v in range(g.n)
                  if deg[v] == 2 and branches.issuperset(nbrs[v]))
    b = min(branches)
    flip = (min(middle, b), max(middle, b))
    return SignedGraph(g.n, [(u, v, -1 if (u, v) == flip else s)
                             for u, v, s in g.edges])


def unbalanced_k23() -> SignedGraph:
    return SignedGraph(5, [(u, v, 1 if (u, v) != (0, 3) else -1)
                           for u in range(2) for v in range(2, 5)])


GALLERY = [
    ("balanced K_{2,3}", generate(BalancedCompleteBipartite(2, 3))),
    ("balanced C_8", generate(Cycle(8, balanced=True))),
    ("unbalanced C_6", generate(Cycle(6, balanced=False))),
    ("C_5 (any signing)", generate(Cycle(5))),
    ("balanced C_6", generate(Cycle(6, balanced=True))),
    ("complete tripartite, rank 3", generate(TripartiteRank3((2, 1, 1)))),
    ("C_4 plus a 2-leaf star", generate(CanonicalUnicyclic(4, {0: 2}))),
    ("balanced C_4 plus an outside star", generate(CycleStar(4, 2))),
    ("unbalanced K_{2,3}", unbalanced_k23()),
    ("theta(5,3,5), both 6-cycles negative", theta_535_negative_cycles()),
    ("balanced theta(5,5,5)", generate(Theta(5, 5, 5))),
    ("subdivided K_4, all four 6-cycles negative",
     generate(SubdividedK4(subdivided_k4_all_negative_six_cycle_signs()))),
]


def main() -> None:
    for name, g in GALLERY:
        p = profile(g)
        r = rank(adjacency_matrix(g)).rank
        low = classify_gminus2(g)
        high = classify_equals_g(g, rank=r)
        verdict = "rank is girth" if r == p.girth else (
            "rank is girth-2" if r == p.girth - 2 else "not extremal")
        tag = low.case if low else (high.case if high else "-")
        print(f"{name:44s} n={g.n:2d} girth={p.girth} rank={r:2d}  "
              f"{verdict:15s} case {tag}")
        if r == p.girth - 2:
            assert low is not None
        if r == p.girth and p.girth != 4:
            assert high is not None


if __name__ == "__main__":
    main()
