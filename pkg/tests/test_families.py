"""Closed-form family ranks against brute-force elimination."""

import random

import numpy as np
import pytest

from conftest import rank_of
from sgrank import (
    BalancedCompleteBipartite,
    CanonicalUnicyclic,
    Cycle,
    CycleStar,
    Path,
    SignedGraph,
    SubdividedK4,
    Theta,
    TripartiteRank3,
    batch_ranks,
    cycles_up_to,
    expected_rank,
    generate,
    is_balanced,
    subdivided_k4_all_negative_six_cycle_signs,
)


def all_signings_ranks(g: SignedGraph):
    """Ranks of every sign assignment of g's underlying graph, indexed by
    bitmask over the sorted edge list (bit set = negative edge)."""
    edges = [(u, v) for u, v, _ in g.edges]
    m = len(edges)
    base = np.zeros((g.n, g.n), dtype=np.int8)
    for u, v in edges:
        base[u, v] = base[v, u] = 1
    mats = np.repeat(base[None, :, :], 1 << m, axis=0)
    masks = np.arange(1 << m)
    for i, (u, v) in enumerate(edges):
        neg = ((masks >> i) & 1).astype(np.int8)
        vals = (1 - 2 * neg).astype(np.int8)
        mats[:, u, v] = vals
        mats[:, v, u] = vals
    return edges, batch_ranks(mats)


def cycle_masks(g: SignedGraph, length: int):
    """Edge bitmasks of every cycle of the given length, over sorted edges."""
    edges = [(u, v) for u, v, _ in g.edges]
    index = {e: i for i, e in enumerate(edges)}
    out = []
    for rec in cycles_up_to(g, length):
        if rec.length != length:
            continue
        mask = 0
        verts = rec.vertices
        for a, b in zip(verts, verts[1:] + verts[:1]):
            mask |= 1 << index[(min(a, b), max(a, b))]
        out.append(mask)
    return out


def parity(x: int) -> int:
    return bin(x).count("1") & 1


class TestPaths:
    @pytest.mark.parametrize("n", range(1, 13))
    def test_rank_matches_parity_formula(self, n):
        expect = n - 1 if n % 2 else n
        spec = Path(n)
        assert expected_rank(spec) == expect
        assert rank_of(generate(spec)) == expect

    def test_rank_is_signing_independent(self):
        rng = random.Random(4)
        for n in range(2, 11):
            edges = [(i, i + 1, rng.choice((1, -1))) for i in range(n - 1)]
            assert rank_of(SignedGraph(n, edges)) == expected_rank(Path(n))


class TestCycles:
    @pytest.mark.parametrize("n", range(3, 13))
    @pytest.mark.parametrize("balanced", [True, False])
    def test_rank_matches_mod4_formula(self, n, balanced):
        if balanced:
            expect = n - 2 if n % 4 == 0 else n
        else:
            expect = n - 2 if n % 4 == 2 else n
        spec = Cycle(n, balanced)
        g = generate(spec)
        assert is_balanced(g) == balanced
        assert expected_rank(spec) == expect
        assert rank_of(g) == expect

    def test_every_signing_in_the_switching_class(self):
        # rank depends only on the cycle sign, never on the sign layout
        for n in (4, 5, 6):
            g = generate(Cycle(n))
            edges, ranks = all_signings_ranks(g)
            [cmask] = cycle_masks(g, n)
            for mask in range(1 << len(edges)):
                balanced = parity(mask & cmask) == 0
                assert ranks[mask] == expected_rank(Cycle(n, balanced))


class TestCompleteBipartite:
    @pytest.mark.parametrize("a,b", [(1, 1), (1, 4), (2, 2), (2, 3), (3, 4)])
    def test_balanced_rank_two(self, a, b):
        spec = BalancedCompleteBipartite(a, b)
        g = generate(spec)
        assert is_balanced(g)
        assert expected_rank(spec) == 2
        assert rank_of(g) == 2

    def test_rejects_empty_side(self):
        with pytest.raises(ValueError):
            generate(BalancedCompleteBipartite(0, 2))


class TestTripartite:
    def test_random_instances_have_rank_three(self):
        rng = random.Random(12)
        for _ in range(20):
            sizes = tuple(rng.randint(1, 3) for _ in range(3))
            n = sum(sizes)
            polarities = tuple(rng.choice((1, -1)) for _ in range(n))
            pair_signs = tuple(rng.choice((1, -1)) for _ in range(3))
            spec = TripartiteRank3(sizes, polarities, pair_signs)
            assert expected_rank(spec) == 3
            assert rank_of(generate(spec)) == 3

    def test_structure_is_complete_tripartite(self):
        g = generate(TripartiteRank3((2, 2, 1)))
        # within-part pairs are the only non-edges
        assert g.m == 2 * 2 + 2 * 1 + 2 * 1
        present = {(u, v) for u, v, _ in g.edges}
        assert (0, 1) not in present and (2, 3) not in present


class TestCanonicalUnicyclic:
    def test_spec_equality_ignores_star_order(self):
        a = CanonicalUnicyclic(5, {0: 2, 3: 1})
        b = CanonicalUnicyclic(5, {3: 1, 0: 2})
        assert a == b
        assert hash(a) == hash(b)
        assert len({a, b}) == 1

    def test_bare_cycle_defers_to_cycle_rank(self):
        assert expected_rank(CanonicalUnicyclic(8, {})) == 6
        assert expected_rank(CanonicalUnicyclic(6, {})) == 6

    @pytest.mark.parametrize(
        "length, stars, expect",
        [
            (4, {0: 2}, 4),       # single star, gap 3 odd: extremal
            (5, {0: 1}, 6),       # gap 4 even
            (6, {0: 1, 3: 2}, 8),  # gaps 2,2 even
            (6, {0: 1, 2: 1}, 6),  # gaps 1,3 odd: extremal
            (3, {0: 1, 1: 1, 2: 1}, 6),  # gaps 0,0,0 even
        ],
    )
    def test_star_gap_formula(self, length, stars, expect):
        spec = CanonicalUnicyclic(length, stars)
        assert expected_rank(spec) == expect
        assert rank_of(generate(spec)) == expect

    def test_random_instances_match_brute_force(self):
        rng = random.Random(99)
        for _ in range(60):
            length = rng.randint(3, 10)
            k = rng.randint(0, min(length, 4))
            centers = rng.sample(range(length), k)
            stars = {c: rng.randint(1, 3) for c in centers}
            spec = CanonicalUnicyclic(length, stars)
            g = generate(spec)
            # random resigning must not move the rank when stars exist
            if stars:
                edges = [(u, v, rng.choice((1, -1))) for u, v, _ in g.edges]
                g = SignedGraph(g.n, edges)
            assert rank_of(g) == expected_rank(spec)


class TestTheta:
    def test_validation(self):
        with pytest.raises(ValueError):
            generate(Theta(2, 2, 4))
        with pytest.raises(ValueError):
            generate(Theta(1, 3, 3))
        with pytest.raises(ValueError):
            generate(Theta(5, 3, 5, signs=(1,)))

    def test_shape(self):
        g = generate(Theta(5, 3, 5))
        assert g.n == 9 and g.m == 10
        assert sorted(g.degrees()) == [2] * 7 + [3, 3]

    @pytest.mark.parametrize("orders", [(2, 4, 4), (4, 4, 4), (2, 4, 6), (4, 4, 6)])
    def test_all_even_orders_are_nonsingular(self, orders):
        spec = Theta(*orders)
        g = generate(spec)
        assert expected_rank(spec) == g.n
        assert rank_of(g) == g.n

    def test_no_closed_form_for_the_generic_case(self):
        assert expected_rank(Theta(5, 3, 5)) is None
        assert expected_rank(Theta(3, 3, 3)) is None

    def test_deficient_signings_truth_table(self):
        # rank drops to n-3 exactly when both short cycles are negative
        g = generate(Theta(5, 3, 5))
        edges, ranks = all_signings_ranks(g)
        sixes = cycle_masks(g, 6)
        assert len(sixes) == 2
        hits = 0
        for mask in range(1 << len(edges)):
            both_negative = all(parity(mask & c) for c in sixes)
            assert (ranks[mask] == 6) == both_negative
            assert ranks[mask] in (6, 8, 9)
            hits += both_negative
        assert hits == 256

    def test_balanced_theta_555_truth_table(self):
        g = generate(Theta(5, 5, 5))
        edges, ranks = all_signings_ranks(g)
        eights = cycle_masks(g, 8)
        assert len(eights) == 3
        hits = 0
        for mask in range(1 << len(edges)):
            balanced = not any(parity(mask & c) for c in eights)
            assert (ranks[mask] == 8) == balanced
            hits += balanced
        assert hits == 1024


class TestSubdividedK4:
    def test_shape(self):
        g = generate(SubdividedK4())
        assert g.n == 10 and g.m == 12
        assert sorted(g.degrees()) == [2] * 6 + [3] * 4
        assert len(cycle_masks(g, 6)) == 4

    def test_all_negative_witness(self):
        signs = subdivided_k4_all_negative_six_cycle_signs()
        spec = SubdividedK4(signs)
        g = generate(spec)
        assert all(rec.sign == -1 for rec in cycles_up_to(g, 6) if rec.length == 6)
        assert expected_rank(spec) == 6
        assert rank_of(g) == 6

    def test_deficient_signings_truth_table(self):
        g = generate(SubdividedK4())
        edges, ranks = all_signings_ranks(g)
        sixes = cycle_masks(g, 6)
        hits = 0
        for mask in range(1 << len(edges)):
            all_negative = all(parity(mask & c) for c in sixes)
            assert (ranks[mask] == 6) == all_negative
            hits += all_negative
        assert hits == 512


class TestCycleStar:
    @pytest.mark.parametrize("length", range(3, 9))
    @pytest.mark.parametrize("leaves", [1, 3])
    @pytest.mark.parametrize("balanced", [True, False])
    def test_rank_is_two_plus_cycle_rank(self, length, leaves, balanced):
        spec = CycleStar(length, leaves, balanced)
        expect = 2 + expected_rank(Cycle(length, balanced))
        assert expected_rank(spec) == expect
        assert rank_of(generate(spec)) == expect

    def test_needs_a_leaf(self):
        with pytest.raises(ValueError):
            generate(CycleStar(4, 0))
