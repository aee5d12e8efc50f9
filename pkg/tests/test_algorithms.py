"""Tests for the search algorithms and partition machinery."""
import math

import numpy as np
import pytest

from parsearch.algorithms import (
    TargetSet,
    bbht_search_unknown,
    choose_regime,
    grover_search_known,
    maxload_bound,
    multi_item_search,
    parallel_search,
    random_partition,
    theorem_envelope,
    verify_locations,
)
from parsearch.core import Database, QueryLedger
from parsearch.experiments import build_database


class TestTargetSet:
    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            TargetSet([1, 1])

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            TargetSet([])


class TestGroverSearchKnown:
    def test_four_addresses_one_marked(self):
        db, targets = build_database(2, 3, 1, seed=0)
        for s in range(25):
            addr, queries = grover_search_known(
                db, np.arange(4), targets, 1, seed=s
            )
            assert queries == 1
            assert addr is not None and db.lookup(addr) == 1

    def test_all_marked_needs_no_iterations(self):
        entries = np.ones(8, dtype=np.int64)
        db = Database(n=3, m=1, entries=entries)
        addr, queries = grover_search_known(
            db, np.arange(8), TargetSet([1]), 8, seed=3
        )
        assert queries == 0
        assert addr is not None

    def test_large_search_success_rate(self):
        db, targets = build_database(10, 11, 1, seed=5)
        hits = 0
        for s in range(10 ** 4):
            addr, queries = grover_search_known(
                db, np.arange(1024), targets, 1, seed=[5, s]
            )
            assert queries == 25
            hits += addr is not None
        assert abs(hits / 10 ** 4 - 0.9995) < 0.002

    def test_overlarge_assumed_count(self):
        db, targets = build_database(3, 4, 1, seed=0)
        with pytest.raises(ValueError):
            grover_search_known(db, np.arange(8), targets, 9, seed=0)


class TestBbhtSearchUnknown:
    def test_nothing_to_find(self):
        db, _ = build_database(8, 9, 1, seed=1)
        absent = TargetSet([500])
        cutoff = math.ceil(9 / 4 * 16) + 2 * math.ceil(math.log(16) / math.log(6 / 5))
        addr, queries = bbht_search_unknown(db, np.arange(256), absent, seed=2)
        assert addr is None
        assert queries <= cutoff

    def test_mean_queries_within_envelope(self):
        db, targets = build_database(8, 9, 4, seed=11)
        totals, hits = [], 0
        for s in range(10 ** 4):
            addr, queries = bbht_search_unknown(
                db, np.arange(256), targets, seed=[11, s]
            )
            totals.append(queries)
            hits += addr is not None
        assert np.mean(totals) <= 4 * math.sqrt(256 / 4)
        assert hits / 10 ** 4 >= 3 / 4

    def test_everything_marked_is_cheap(self):
        entries = np.ones(64, dtype=np.int64)
        db = Database(n=6, m=1, entries=entries)
        totals = []
        for s in range(2000):
            addr, queries = bbht_search_unknown(
                db, np.arange(64), TargetSet([1]), seed=s
            )
            assert addr is not None
            totals.append(queries)
        assert np.mean(totals) <= 3

    def test_empty_subdomain_rejected(self):
        db, targets = build_database(3, 4, 1, seed=0)
        with pytest.raises(ValueError):
            bbht_search_unknown(db, np.array([], dtype=np.int64), targets, seed=0)


class TestMultiItemSearch:
    def test_zero_cap_is_empty(self):
        db, targets = build_database(4, 5, 2, seed=3)
        out = multi_item_search(db, np.arange(16), targets, 0, seed=0)
        assert out.located == {}
        assert out.ledger.oracle_counts[0] == 0

    def test_two_of_sixteen(self):
        successes, totals = 0, []
        for s in range(10 ** 4):
            db, targets = build_database(4, 5, 2, seed=[7, s])
            out = multi_item_search(db, np.arange(16), targets, 2, seed=[8, s])
            successes += out.success
            totals.append(out.ledger.oracle_counts[0])
        assert successes / 10 ** 4 >= 3 / 4
        assert np.mean(totals) <= 4 * math.sqrt(16 * 2)

    def test_single_item_reduces_to_plain_grover(self):
        db, targets = build_database(10, 11, 1, seed=9)
        totals = []
        for s in range(200):
            out = multi_item_search(db, np.arange(1024), targets, 1, seed=[9, s])
            totals.append(out.ledger.oracle_counts[0])
        # 25 iterations on success; the occasional fallback adds more
        assert np.median(totals) == 25

    def test_success_means_all_present_located(self):
        db, targets = build_database(6, 7, 4, seed=13)
        # search only half the address space: success must track what is
        # actually present there, not all of k
        sub = np.arange(32)
        present = {int(v) for v in db.entries[:32]} & set(targets.items)
        out = multi_item_search(db, sub, targets, 4, seed=14)
        if out.success:
            assert set(out.located) == present
        for item, addr in out.located.items():
            assert db.lookup(addr) == item

    def test_find_times_are_increasing_and_bounded(self):
        db, targets = build_database(8, 9, 3, seed=15)
        out = multi_item_search(db, np.arange(256), targets, 3, seed=16)
        times = sorted(out.find_times.values())
        assert times == sorted(set(times))
        assert all(0 <= t <= out.ledger.oracle_counts[0] for t in times)


class TestRandomPartition:
    def test_single_cell(self):
        part = random_partition(8, 1, seed=0)
        assert part.d == 1
        np.testing.assert_array_equal(part.cells[0], np.arange(8))

    def test_eight_into_four(self):
        part = random_partition(8, 4, seed=1)
        assert part.sizes == (2, 2, 2, 2)
        combined = np.concatenate(part.cells)
        assert sorted(combined.tolist()) == list(range(8))

    @pytest.mark.parametrize("N,d", [(10, 3), (1024, 16), (100, 7)])
    def test_soundness_over_seeds(self, N, d):
        for s in range(20):
            part = random_partition(N, d, seed=s)
            combined = np.concatenate(part.cells)
            assert sorted(combined.tolist()) == list(range(N))
            assert max(part.sizes) - min(part.sizes) <= 1

    def test_too_many_cells(self):
        with pytest.raises(ValueError):
            random_partition(4, 5, seed=0)


class TestChooseRegime:
    def test_small_k(self):
        params = choose_regime(2 ** 16, 64, 4)
        assert params.regime == "k<=sqrt(d)" and params.t == 2

    def test_mid_k(self):
        params = choose_regime(2 ** 16, 16, 10)
        assert params.regime == "sqrt(d)<k<=d" and params.t == 20

    def test_large_k(self):
        params = choose_regime(2 ** 16, 4, 64)
        assert params.regime == "k>d*lg(d)" and params.t == 32

    def test_between_d_and_dlgd(self):
        params = choose_regime(2 ** 16, 16, 40)
        assert params.regime == "d<k<=d*lg(d)"
        assert params.t == math.ceil(5 * 40 * 4 / 16)

    def test_standing_assumption_warns(self):
        with pytest.warns(UserWarning):
            choose_regime(16, 8, 1)


class TestTheoremEnvelope:
    def test_d_one_uses_lg_floor(self):
        # lg 1 is treated as 1, recovering the sqrt(N*k) single-copy cost
        assert theorem_envelope(2 ** 10, 1, 4) == pytest.approx(
            math.sqrt(2 ** 10 * 4)
        )

    def test_case_two_value(self):
        assert theorem_envelope(2 ** 12, 16, 16) == pytest.approx(32.0)


class TestMaxloadBound:
    def test_direct_values(self):
        assert maxload_bound(2, 2, 4) == pytest.approx(0.0625)
        assert maxload_bound(1, 1, 1) == pytest.approx(1.0)
        assert maxload_bound(4, 2, 64) == pytest.approx(6 / 4096)

    def test_cap_above_k_is_zero(self):
        assert maxload_bound(16, 20, 16) == 0.0


class TestVerifyLocations:
    def _outcome(self, db, targets, located, d=1):
        from parsearch.algorithms import SearchOutcome

        return SearchOutcome(
            targets=targets, located=located, success=False,
            ledger=QueryLedger(d),
        )

    def test_empty_claim_fails(self):
        db, targets = build_database(4, 5, 2, seed=0)
        out = self._outcome(db, targets, {})
        assert verify_locations(db, out) is False

    def test_correct_map_passes_and_counts_rounds(self):
        db, targets = build_database(4, 5, 3, seed=1)
        located = {int(v): int(a) for a, v in enumerate(db.entries)
                   if v in targets.items}
        out = self._outcome(db, targets, located, d=2)
        assert verify_locations(db, out) is True
        assert out.ledger.verification_rounds == math.ceil(3 / 2)

    def test_one_wrong_address_fails(self):
        db, targets = build_database(4, 5, 2, seed=2)
        located = {int(v): int(a) for a, v in enumerate(db.entries)
                   if v in targets.items}
        first = next(iter(located))
        located[first] = (located[first] + 1) % db.size
        out = self._outcome(db, targets, located)
        assert verify_locations(db, out) is False


class TestParallelSearch:
    def test_d_one_reduction(self):
        # same seed stream => identical oracle-query decisions as the
        # single-database multi-item search with cap k
        for s in range(15):
            db, targets = build_database(8, 9, 3, seed=[41, s])
            par = parallel_search(db, 1, targets, seed=s)
            single = multi_item_search(
                db, np.arange(256), targets, 3, seed=[s, 0, 0]
            )
            assert par.located == single.located
            assert par.ledger.oracle_counts[0] == single.ledger.oracle_counts[0]

    def test_success_soundness(self):
        for s in range(30):
            db, targets = build_database(8, 9, 4, seed=[43, s])
            out = parallel_search(db, 4, targets, seed=[44, s])
            if out.success:
                assert set(out.located) == set(targets.items)
                for item, addr in out.located.items():
                    assert db.lookup(addr) == item

    def test_ledger_rounds_consistency(self):
        db, targets = build_database(10, 11, 4, seed=45)
        out = parallel_search(db, 8, targets, seed=46)
        assert out.parallel_rounds == sum(out.ledger.rounds_per_repetition)
        assert len(out.ledger.rounds_per_repetition) == out.repetitions
        assert max(out.ledger.oracle_counts) <= out.parallel_rounds

    def test_promise_violation_flagged(self):
        db, _ = build_database(6, 8, 2, seed=47)
        ghost = TargetSet([200, 201])  # not in the database
        out = parallel_search(db, 2, ghost, seed=48)
        assert out.promise_ok is False
        assert out.success is False

    def test_invalid_copy_count(self):
        db, targets = build_database(3, 4, 1, seed=0)
        with pytest.raises(ValueError):
            parallel_search(db, 100, targets, seed=0)

    def test_basic_parallel_run(self):
        hits = 0
        for s in range(30):
            db, targets = build_database(10, 11, 2, seed=[49, s])
            out = parallel_search(db, 4, targets, seed=[50, s])
            hits += out.success
        assert hits / 30 >= 3 / 4

    def test_scaling_band(self):
        # desk-scale form of the parallel cost claim: the ratio of measured
        # rounds to the regime expression stays in a fixed band across N
        d, k = 4, 4
        for n in (8, 10, 12):
            rounds = []
            for s in range(30):
                db, targets = build_database(n, n + 1, k, seed=[51, n, s])
                out = parallel_search(db, d, targets, seed=[52, n, s])
                rounds.append(out.parallel_rounds)
            ratio = np.mean(rounds) / theorem_envelope(1 << n, d, k)
            assert 1 / 8 <= ratio <= 4
