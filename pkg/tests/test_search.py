"""Representative search harness and existence verdicts."""

import pytest

from signednut import (
    DisconnectedGraphError,
    SearchConfig,
    SignedGraph,
    classify,
    complete_nut,
    count_signings,
    existence_verdict,
    search_class,
    switching_equivalent,
)
from signednut.search import (
    MODE_COUNT_ALL,
    MODE_FIRST_WITNESS,
    SYMBOL_IMPOSSIBLE,
    SYMBOL_NONE,
    SYMBOL_PROPER_ONLY,
    SYMBOL_TRADITIONAL,
    WANT_PROPER,
    WANT_UNSIGNED,
)

from conftest import (
    all_connected_graphs,
    all_signings,
    complete,
    cycle,
    load_fixture,
    path,
)


class TestCountSignings:
    def test_triangle(self):
        assert count_signings(cycle(3)) == (8, 2, 4)

    def test_k4(self):
        assert count_signings(complete(4)) == (64, 8, 8)

    def test_tree(self):
        assert count_signings(path(5)) == (16, 1, 16)

    def test_disconnected_rejected(self):
        g = SignedGraph.from_edges(4, [(0, 1), (2, 3)])
        with pytest.raises(DisconnectedGraphError):
            count_signings(g)


class TestConfig:
    def test_bad_mode(self):
        with pytest.raises(ValueError):
            SearchConfig(mode="bogus")

    def test_bad_want(self):
        with pytest.raises(ValueError):
            SearchConfig(want=frozenset({"nope"}))
        with pytest.raises(ValueError):
            SearchConfig(want=frozenset())

    def test_bad_workers(self):
        with pytest.raises(ValueError):
            SearchConfig(worker_count=0)

    def test_negative_cap(self):
        with pytest.raises(ValueError):
            SearchConfig(graph_limit=-1)


class TestSearchClass:
    def test_k5_proper_only(self):
        outcome = search_class([complete(5)], SearchConfig())
        assert outcome.verdict == "proper-only"
        assert outcome.parameters == (5, 4)
        assert outcome.signings_tested == 1 << (10 - 5 + 1)
        assert outcome.exhaustive
        witness, report = outcome.witnesses[0]
        assert report.is_nut and report.signed_class == "proper"

    def test_k5_class_of_reference_construction_found(self):
        # among all nut representatives, one lies in the switching class
        # of the explicit complete-graph construction
        cfg = SearchConfig(mode=MODE_COUNT_ALL)
        outcome = search_class([complete(5)], cfg)
        assert any(
            switching_equivalent(w, complete_nut(1).result)
            for w, _ in outcome.witnesses
        )

    def test_k6_none_found(self):
        outcome = search_class([complete(6)], SearchConfig())
        assert outcome.verdict == "none-found"
        assert outcome.signings_tested == 1 << (15 - 6 + 1)
        assert not outcome.witnesses

    def test_cubic_8_none_found(self):
        graphs = load_fixture(3, 8)
        outcome = search_class(graphs, SearchConfig(), parameters=(8, 3))
        assert outcome.verdict == "none-found"
        assert outcome.graphs_scanned == 5
        assert outcome.signings_tested == 5 * (1 << (12 - 8 + 1))

    def test_empty_stream(self):
        outcome = search_class([], SearchConfig())
        assert outcome.verdict == "none-found"
        assert outcome.graphs_scanned == 0
        assert outcome.signings_tested == 0

    def test_non_regular_graph_recorded_as_error(self):
        outcome = search_class([path(4)], SearchConfig())
        assert outcome.errors
        assert not outcome.exhaustive

    def test_parameter_mismatch_recorded(self):
        outcome = search_class([complete(4)], SearchConfig(), parameters=(5, 4))
        assert outcome.errors
        assert outcome.graphs_scanned == 0

    def test_signing_cap(self):
        cfg = SearchConfig(signing_limit=3)
        outcome = search_class([complete(5)], cfg)
        assert outcome.signings_tested == 3
        assert not outcome.exhaustive
        assert outcome.verdict in ("capped", "proper-only")

    def test_graph_cap(self):
        graphs = load_fixture(3, 8)
        cfg = SearchConfig(graph_limit=2)
        outcome = search_class(graphs, cfg, parameters=(8, 3))
        assert outcome.graphs_scanned == 2
        assert outcome.verdict == "capped"

    def test_count_all_mode_counts_every_nut(self):
        cfg = SearchConfig(mode=MODE_COUNT_ALL)
        outcome = search_class([complete(5)], cfg)
        # brute count over the representatives for cross-checking
        expected = sum(
            1
            for g in _representatives(complete(5))
            if classify(g).is_nut
        )
        assert outcome.nut_count == expected
        assert expected > 0

    def test_first_witness_stops_early(self):
        cfg = SearchConfig(mode=MODE_FIRST_WITNESS, want=frozenset({WANT_PROPER}))
        outcome = search_class([complete(5)], cfg)
        assert outcome.witnesses
        assert outcome.signings_tested < 1 << 6

    def test_prepass_finds_same_answer(self):
        plain = SearchConfig(mode=MODE_FIRST_WITNESS)
        pre = SearchConfig(mode=MODE_FIRST_WITNESS, prepass=True)
        a = search_class([complete(5)], plain)
        b = search_class([complete(5)], pre)
        assert a.verdict == b.verdict == "proper-only"

    def test_workers_match_sequential(self):
        graphs = load_fixture(4, 8)
        seq = search_class(graphs, SearchConfig(worker_count=1), parameters=(8, 4))
        par = search_class(graphs, SearchConfig(worker_count=4), parameters=(8, 4))
        assert seq.verdict == par.verdict
        assert seq.signings_tested == par.signings_tested
        assert seq.graphs_scanned == par.graphs_scanned
        key = lambda w: (w[0].edges, w[0].signs)
        assert sorted(map(key, seq.witnesses)) == sorted(map(key, par.witnesses))

    def test_witnesses_self_validating(self):
        outcome = search_class(load_fixture(4, 5), SearchConfig(mode=MODE_COUNT_ALL))
        assert outcome.witnesses
        for witness, report in outcome.witnesses:
            fresh = classify(witness)
            assert fresh.is_nut
            assert fresh.kernel_vector == report.kernel_vector


def _representatives(g):
    from signednut import enumerate_class_representatives

    return enumerate_class_representatives(g)


class TestOracleEquivalence:
    def test_small_graphs_match_naive_search(self):
        # representative search vs. all 2^m signings, every connected
        # graph on up to 5 vertices (criterion 9 extends this to n <= 6)
        for base in all_connected_graphs(5):
            degs = set(d for d in base.degrees())
            if len(degs) != 1:
                continue
            outcome = search_class([base], SearchConfig())
            naive_nuts = [g for g in all_signings(base) if classify(g).is_nut]
            assert (outcome.verdict != "none-found") == bool(naive_nuts)
            if naive_nuts:
                has_traditional = any(
                    classify(g).signed_class in ("all-positive-input", "traditional")
                    for g in naive_nuts
                )
                assert (outcome.verdict == "unsigned-nut-exists") == has_traditional


class TestExistenceVerdict:
    def test_k5_cell(self):
        assert existence_verdict(5, 4, [complete(5)]) == SYMBOL_PROPER_ONLY

    def test_k6_cell_impossible(self):
        assert existence_verdict(6, 5, [complete(6)]) == SYMBOL_IMPOSSIBLE

    def test_cubic_8_none(self):
        assert existence_verdict(8, 3, load_fixture(3, 8)) == SYMBOL_NONE

    def test_cubic_12_traditional(self):
        assert existence_verdict(12, 3, load_fixture(3, 12)) == SYMBOL_TRADITIONAL

    def test_incomplete_catalogue_not_attempted(self):
        from signednut.search import SYMBOL_NOT_ATTEMPTED

        assert (
            existence_verdict(8, 3, load_fixture(3, 8), complete=False)
            == SYMBOL_NOT_ATTEMPTED
        )
