import random
from fractions import Fraction
from math import comb

import pytest

import frhyper as fh
import helpers


class TestExistenceCheck:
    def test_asymmetric_example_passes(self):
        seq = fh.DegreeSequencePair((4, 3, 2, 2, 2), (2, 2, 2, 2, 2, 3))
        assert fh.existence_check(seq) is fh.ExistenceVerdict.SUFFICIENT_PASS

    def test_dominance_failure_is_indeterminate(self):
        seq = fh.DegreeSequencePair((3, 1), (2, 2))
        assert fh.existence_check(seq) is fh.ExistenceVerdict.INDETERMINATE

    def test_minimal(self):
        seq = fh.DegreeSequencePair((1,), (1,))
        assert fh.existence_check(seq) is fh.ExistenceVerdict.SUFFICIENT_PASS

    def test_sum_mismatch(self):
        seq = fh.DegreeSequencePair((2, 2), (1, 1, 1))
        assert fh.existence_check(seq) is fh.ExistenceVerdict.NECESSARY_FAIL

    def test_overfull_replication_not_sufficient(self):
        # rho_1 = 3 copies cannot sit on 2 distinct nodes
        seq = fh.DegreeSequencePair((2, 2), (3, 1))
        assert fh.existence_check(seq) is fh.ExistenceVerdict.INDETERMINATE

    def test_order_insensitive(self):
        a = fh.DegreeSequencePair((2, 4, 2, 3, 2), (3, 2, 2, 2, 2, 2))
        assert fh.existence_check(a) is fh.ExistenceVerdict.SUFFICIENT_PASS

    def test_entries_must_be_positive(self):
        with pytest.raises(fh.ValidationError):
            fh.DegreeSequencePair((0, 2), (1, 1))

    def test_own_vectors_never_necessary_fail(self):
        rng = random.Random(21)
        for _ in range(200):
            code = helpers.random_code(rng)
            seq = fh.DegreeSequencePair(code.alpha_vec, code.rho_vec)
            assert fh.existence_check(seq) is not fh.ExistenceVerdict.NECESSARY_FAIL


class TestRealize:
    def test_asymmetric_margins(self):
        seq = fh.DegreeSequencePair((4, 3, 2, 2, 2), (2, 2, 2, 2, 2, 3))
        code = fh.realize(seq)
        assert code.alpha_vec == seq.alpha_vec
        assert code.rho_vec == seq.rho_vec

    def test_minimal(self):
        code = fh.realize(fh.DegreeSequencePair((1,), (1,)))
        assert code.nodes == (frozenset({1}),)

    def test_k4_shape(self):
        seq = fh.DegreeSequencePair((3, 3, 3, 3), (2, 2, 2, 2, 2, 2))
        code = fh.realize(seq)
        assert code.alpha_vec == seq.alpha_vec
        assert code.rho_vec == seq.rho_vec

    def test_deterministic(self):
        seq = fh.DegreeSequencePair((3, 2, 2, 1), (2, 2, 2, 1, 1))
        assert fh.realize(seq) == fh.realize(seq)

    def test_sum_mismatch_unrealizable(self):
        with pytest.raises(fh.UnrealizableError):
            fh.realize(fh.DegreeSequencePair((2,), (1, 1, 1)))

    def test_infeasible_pair_unrealizable(self):
        with pytest.raises(fh.UnrealizableError):
            fh.realize(fh.DegreeSequencePair((2, 2), (3, 1)))

    def test_matches_matrix_oracle_small(self):
        # all descending pairs with equal sums <= 8
        total_checked = 0
        for s in range(1, 9):
            for alpha in helpers.partitions(s):
                for rho in helpers.partitions(s):
                    try:
                        code = fh.realize(fh.DegreeSequencePair(alpha, rho))
                        built = True
                        assert code.alpha_vec == alpha
                        assert code.rho_vec == rho
                    except fh.UnrealizableError:
                        built = False
                    assert built == helpers.oracle_matrix_exists(alpha, rho)
                    total_checked += 1
        assert total_checked > 500


class TestCheckBounds:
    def test_asymmetric_example(self, hetero):
        report = fh.check_bounds(hetero, k=3)
        assert report.entry("replication-pair-count").lhs == 8
        assert report.entry("replication-pair-count").rhs == 10
        assert report.entry("storage-pair-count").lhs == 12
        assert report.entry("storage-pair-count").rhs == 15
        lym = report.entry("lym-sum")
        assert lym.lhs == Fraction(19, 60)
        assert lym.satisfied
        anti = report.entry("antichain-node-count")
        assert (anti.lhs, anti.rhs) == (5, 20)
        assert not report.entry("uniform-divisibility").applicable
        assert report.all_satisfied()

    def test_k4(self, k4):
        report = fh.check_bounds(k4, k=2)
        packet_count = report.entry("uniform-packet-count")
        assert packet_count.applicable and packet_count.tight
        assert packet_count.rhs == 6
        node_count = report.entry("regular-node-count")
        assert (node_count.lhs, node_count.rhs) == (4, 5)
        assert report.entry("uniform-divisibility").satisfied
        assert report.entry("uniform-total-storage").lhs == 6
        assert report.entry("uniform-total-storage").rhs == 12
        assert report.entry("uniform-max-capacity").lhs == 3
        assert report.entry("uniform-max-capacity").rhs == 6
        assert report.entry("file-size-lower").tight
        assert report.all_satisfied()

    def test_single_node_gates(self):
        code = fh.validate_fr([{1}], theta=1)
        report = fh.check_bounds(code)
        assert not report.entry("regular-node-count").applicable
        assert not report.entry("uniform-packet-count").applicable
        assert not report.entry("uniform-total-storage").applicable
        assert report.all_satisfied()

    def test_non_linear_code_gated_not_violated(self):
        code = fh.validate_fr([{1, 2}, {1, 2}], theta=2)
        report = fh.check_bounds(code, k=2)
        for name in (
            "replication-pair-count",
            "storage-pair-count",
            "linear-edge-count",
            "regular-node-count",
            "uniform-packet-count",
            "file-size-lower",
        ):
            entry = report.entry(name)
            assert not entry.applicable
            assert entry.reason == "not linear"
        assert report.all_satisfied()

    def test_containment_gates_antichain(self):
        code = fh.validate_fr([{1, 2}, {1}], theta=2)
        assert not fh.check_bounds(code).entry("lym-sum").applicable

    def test_linear_bounds_hold_on_random_linear_codes(self):
        rng = random.Random(22)
        seen = 0
        while seen < 80:
            code = helpers.random_code(rng, max_n=7, max_theta=9)
            if not fh.is_universally_good(code):
                continue
            report = fh.check_bounds(code, k=min(2, code.n))
            for name in ("replication-pair-count", "storage-pair-count",
                         "linear-edge-count", "file-size-lower"):
                assert report.entry(name).satisfied
            seen += 1

    def test_constructed_codes_satisfy_every_applicable_bound(self):
        for n in range(3, 9):
            state = fh.algorithm1(n, 2, theta=min(2 * n - 3, n * (n - 1) // 2))
            report = fh.check_bounds(state.code, k=2)
            assert report.all_satisfied()

    def test_antichain_bounds_hold_whenever_gate_passes(self):
        rng = random.Random(23)
        seen = 0
        for _ in range(500):
            code = helpers.random_code(rng, max_n=7, max_theta=9)
            report = fh.check_bounds(code)
            entry = report.entry("lym-sum")
            if entry.applicable:
                assert entry.satisfied
                assert report.entry("antichain-node-count").satisfied
                seen += 1
        assert seen > 30


class TestPairingBound:
    def test_disjoint_singletons(self):
        code = fh.validate_fr([{1}, {2}], theta=2)
        result = fh.check_pairing_bound(code, fh.PacketPairing(((1, 2),)))
        assert result.hypothesis_holds
        assert result.total == Fraction(1, 2)
        assert result.satisfied

    def test_k4_opposite_pairs(self, k4):
        result = fh.check_pairing_bound(
            k4, fh.PacketPairing(((1, 6), (2, 5), (3, 4)))
        )
        assert result.hypothesis_holds
        assert result.total == Fraction(1, 2)
        assert result.satisfied

    def test_cohabiting_pair_fails_hypothesis(self):
        code = fh.validate_fr([{1, 2}, {3, 4}], theta=4)
        result = fh.check_pairing_bound(code, fh.PacketPairing(((1, 2), (3, 4))))
        assert not result.hypothesis_holds
        assert result.total is None and result.satisfied is None

    def test_odd_theta(self):
        code = fh.validate_fr([{1, 2, 3}], theta=3)
        with pytest.raises(fh.OddThetaError):
            fh.check_pairing_bound(code, fh.PacketPairing(((1, 2),)))

    def test_pairing_must_partition(self, k4):
        with pytest.raises(fh.ValidationError):
            fh.check_pairing_bound(k4, fh.PacketPairing(((1, 2), (3, 4), (5, 5))))

    def test_search_finds_k4_pairing(self, k4):
        pairing = fh.find_valid_pairing(k4)
        assert pairing is not None
        assert fh.check_pairing_bound(k4, pairing).hypothesis_holds

    def test_search_exhausts(self):
        # both packets everywhere: F and F' always intersect
        code = fh.validate_fr([{1, 2}, {1, 2}], theta=2)
        assert fh.find_valid_pairing(code) is None


class TestDistanceBounds:
    def test_asymmetric_example(self, hetero):
        db = fh.distance_bounds(hetero, 3)
        assert db.singleton_like == 4
        assert db.observed == 3
        assert db.within_singleton

    def test_k4_tight(self, k4):
        db = fh.distance_bounds(k4, 2)
        assert db.singleton_like == 3
        assert db.observed == 3

    def test_single_node(self):
        code = fh.validate_fr([{1}], theta=1)
        db = fh.distance_bounds(code, 1)
        assert db.singleton_like == 1
        assert db.observed == 1
        assert db.locally_repairable is None

    def test_singleton_holds_on_random_codes(self):
        rng = random.Random(24)
        for _ in range(120):
            code = helpers.random_code(rng, max_n=6, max_theta=8)
            k = rng.randint(1, code.n)
            assert fh.distance_bounds(code, k).within_singleton


class TestGfrBound:
    def test_k4_tight(self, k4):
        result = fh.gfr_bound_check(k4, 2)
        assert result.applicable
        assert (result.lhs, result.rhs) == (5, 5)
        assert result.satisfied and result.tight

    def test_asymmetric_k1(self, hetero):
        result = fh.gfr_bound_check(hetero, 1)
        assert result.lhs == 2
        assert result.rhs == 2
        assert result.satisfied

    def test_single_node_gated(self):
        code = fh.validate_fr([{1}], theta=1)
        result = fh.gfr_bound_check(code, 1)
        assert not result.applicable
        assert result.reason == "no repair possible"

    def test_irreparable_propagates(self):
        code = fh.validate_fr([{1, 2}, {2}], theta=2)
        with pytest.raises(fh.IrreparableNodeError):
            fh.gfr_bound_check(code, 1)


class TestFileSizeBrackets:
    def test_upper_bound_holds_for_all_codes(self):
        rng = random.Random(25)
        for _ in range(150):
            code = helpers.random_code(rng, max_n=7, max_theta=9)
            for k in range(1, code.n + 1):
                lower, mk, upper = fh.flexible_bounds(code, k)
                assert mk <= upper
                # the tighter ascending-sum upper side also holds
                assert mk <= sum(sorted(code.alpha_vec)[:k])
                if fh.is_universally_good(code):
                    assert lower <= mk

    def test_values(self, hetero):
        assert fh.universally_good_lower_bound(hetero, 3) == 2 + 2 + 2 - comb(3, 2)
        assert fh.file_size_upper_bound(hetero, 2) == 7
