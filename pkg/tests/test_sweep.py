"""Sweep machinery: signing enumeration, graph streams, checks, reports."""

import csv
import json
import random

import networkx as nx
import pytest

from conftest import rank_of, random_connected_graph
from sgrank import (
    CHECKS,
    DEFAULT_CHECKS,
    Graph6Error,
    SignedGraph,
    SweepConfig,
    canonical_switching_representative,
    dense_graphs,
    enumerate_signings,
    is_balanced,
    parse_graph6,
    run,
    sparse_graphs,
    switch,
    write_counterexamples_csv,
)
from sgrank.sweep import _dense_chunk, _edge_table


K4_EDGES = [(u, v) for u in range(4) for v in range(u + 1, 4)]


class TestSigningEnumeration:
    def test_one_representative_per_class(self):
        reps = list(enumerate_signings(4, K4_EDGES))
        assert len(reps) == 8  # 2^(6-3) switching classes
        assert len(set(reps)) == 8
        assert is_balanced(reps[0])

    def test_covers_every_signing(self):
        reps = {canonical_switching_representative(g)
                for g in enumerate_signings(4, K4_EDGES)}
        seen = set()
        for mask in range(1 << 6):
            edges = [(u, v, -1 if (mask >> i) & 1 else 1)
                     for i, (u, v) in enumerate(K4_EDGES)]
            g = SignedGraph(4, edges)
            rep = canonical_switching_representative(g)
            assert rep in reps
            assert rank_of(rep) == rank_of(g)
            seen.add(rep)
        assert seen == reps

    def test_representative_is_switching_invariant(self):
        rng = random.Random(6)
        for _ in range(25):
            g = random_connected_graph(rng, rng.randint(2, 8), extra=0.4)
            subset = {v for v in range(g.n) if rng.random() < 0.5}
            assert (canonical_switching_representative(switch(g, subset))
                    == canonical_switching_representative(g))

    def test_unicyclic_has_two_classes(self):
        reps = list(enumerate_signings(5, [(i, (i + 1) % 5) for i in range(5)]))
        assert len(reps) == 2
        assert is_balanced(reps[0]) and not is_balanced(reps[1])


class TestDenseStream:
    def test_labeled_count_n4(self):
        # 38 labeled connected graphs on 4 vertices minus 16 trees
        assert sum(1 for _ in dense_graphs(4)) == 22

    def test_all_connected_and_cyclic(self):
        for mask, edges in dense_graphs(4):
            g = nx.Graph(edges)
            g.add_nodes_from(range(4))
            assert nx.is_connected(g)
            assert g.number_of_edges() >= 4

    def test_girth_hints_match_bfs(self):
        from sgrank import girth_of_adjacency

        n = 5
        total = 1 << len(_edge_table(n))
        masks, counts, hints = _dense_chunk(n, 0, total)
        for mask, hint in zip(masks.tolist(), hints.tolist()):
            edges = [e for i, e in enumerate(_edge_table(n)) if (mask >> i) & 1]
            adj = [[] for _ in range(n)]
            for u, v in edges:
                adj[u].append(v)
                adj[v].append(u)
            girth = girth_of_adjacency(adj)
            if hint:
                assert girth == hint
            else:
                assert girth is None or girth >= 5


class TestSparseStream:
    def test_stream_is_stable(self):
        assert sum(1 for _ in sparse_graphs(6, 3)) == 346

    def test_members_are_well_formed(self):
        for n, edges in sparse_graphs(7, 2):
            g = nx.Graph(edges)
            g.add_nodes_from(range(n))
            assert n <= 7
            assert nx.is_connected(g)
            c = g.number_of_edges() - n + 1
            assert 1 <= c <= 2

    def test_contains_known_probes(self):
        probes = [
            nx.cycle_graph(3),
            nx.complete_bipartite_graph(2, 3),
            nx.Graph([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]),
        ]
        stream = [(n, edges) for n, edges in sparse_graphs(6, 3)]
        for pg in probes:
            assert any(
                n == pg.number_of_nodes()
                and len(edges) == pg.number_of_edges()
                and nx.is_isomorphic(pg, nx.Graph(edges))
                for n, edges in stream
            )


class TestGraph6:
    def test_reads_networkx_output(self):
        graphs = [nx.path_graph(4), nx.cycle_graph(5), nx.complete_graph(4)]
        text = b"".join(nx.to_graph6_bytes(g) for g in graphs).decode()
        out = parse_graph6(text)
        assert [n for n, _ in out] == [4, 5, 4]
        for (n, edges), g in zip(out, graphs):
            assert nx.is_isomorphic(nx.Graph(edges), g)

    def test_header_and_blank_lines(self):
        assert parse_graph6(">>graph6<<C~\n\n") == [
            (4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)])
        ]

    @pytest.mark.parametrize(
        "text, fragment",
        [
            ("Dhd\n", "padding"),
            ("D\n", "expected 2 data characters"),
            ("C!\n", "printable graph6 range"),
        ],
    )
    def test_malformed_records(self, text, fragment):
        with pytest.raises(Graph6Error, match=fragment):
            parse_graph6(text)

    def test_order_cap(self):
        big = nx.to_graph6_bytes(nx.path_graph(20)).decode()
        with pytest.raises(Graph6Error, match="order 20"):
            parse_graph6(big)


class TestSweepRuns:
    def test_small_run_is_clean(self):
        rep = run(SweepConfig(max_n_dense=5, max_n_sparse=6))
        assert rep.total_failures() == 0
        assert rep.graphs > 900
        assert rep.instances > 5000
        for name in DEFAULT_CHECKS:
            assert rep.checked.get(name, 0) >= 0
        assert rep.checked["rank_ge_girth_minus_2"] == rep.instances

    def test_deterministic_across_jobs(self):
        r1 = run(SweepConfig(max_n_dense=5, max_n_sparse=6, jobs=1))
        r2 = run(SweepConfig(max_n_dense=5, max_n_sparse=6, jobs=3))
        d1, d2 = r1.to_json_dict(), r2.to_json_dict()
        for d in (d1, d2):
            d["config"]["jobs"] = 0
            d["elapsed_seconds"] = 0
        assert d1 == d2

    def test_self_test_check_reports_counterexamples(self, tmp_path):
        cfg = SweepConfig(
            max_n_dense=4,
            max_n_sparse=5,
            checks=("rank_ge_girth_minus_1",),
            max_counterexamples=6,
        )
        rep = run(cfg)
        assert rep.total_failures() > 0
        assert 0 < len(rep.counterexamples) <= 6
        ce = rep.counterexamples[0]
        from sgrank import parse_sgr, profile

        g = parse_sgr(ce["sgr"])
        assert rank_of(g) == ce["rank"] < profile(g).girth - 1

        out = tmp_path / "ces.csv"
        write_counterexamples_csv(rep, out)
        with open(out) as fh:
            rows = list(csv.reader(fh))
        assert rows[0][0] == "check"
        assert len(rows) == len(rep.counterexamples) + 1

    def test_graph6_source(self, tmp_path):
        graphs = [
            nx.cycle_graph(5),
            nx.complete_graph(4),
            nx.path_graph(4),                 # acyclic: skipped
            nx.disjoint_union(nx.cycle_graph(3), nx.cycle_graph(3)),  # skipped
        ]
        path = tmp_path / "in.g6"
        path.write_bytes(b"".join(nx.to_graph6_bytes(g) for g in graphs))
        cfg = SweepConfig(max_n_dense=0, max_n_sparse=0,
                          graph6_paths=(str(path),))
        rep = run(cfg)
        assert rep.graphs == 2
        assert rep.skipped_graph6_records == 2
        assert rep.instances == 2 + 8  # C5: 2 classes, K4: 8
        assert rep.total_failures() == 0

    def test_json_report_shape(self):
        rep = run(SweepConfig(max_n_dense=4, max_n_sparse=4))
        data = json.loads(rep.to_json())
        assert data["schema"] == 1
        assert data["totals"]["graphs"] == rep.graphs
        assert set(data["checks"]) == set(DEFAULT_CHECKS)

    def test_instance_checks_run_clean(self):
        names = (
            "pendant_identity",
            "vertex_deletion_bounds",
            "nullity_cyclomatic_bound",
            "outside_vertex_girth",
            "switching_invariance",
            "twin_deletion_rank",
        )
        rep = run(SweepConfig(max_n_dense=5, max_n_sparse=5,
                              checks=DEFAULT_CHECKS + names))
        assert rep.total_failures() == 0
        for name in names:
            assert rep.checked[name] > 0


class TestConfigValidation:
    def test_bad_bounds(self):
        with pytest.raises(ValueError):
            run(SweepConfig(max_n_dense=8))
        with pytest.raises(ValueError):
            run(SweepConfig(max_n_sparse=13))
        with pytest.raises(ValueError):
            run(SweepConfig(max_cyclomatic=0))
        with pytest.raises(ValueError):
            run(SweepConfig(jobs=0))

    def test_unknown_check(self):
        with pytest.raises(ValueError, match="unknown checks"):
            run(SweepConfig(checks=("no_such_check",)))

    def test_registry_consistency(self):
        assert set(DEFAULT_CHECKS) <= set(CHECKS)
        assert "rank_ge_girth_minus_1" in CHECKS
        assert "rank_ge_girth_minus_1" not in DEFAULT_CHECKS
