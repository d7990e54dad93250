import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from optprune.errors import AllZeroDifferences, LengthMismatch, ZeroBaseline
from optprune.stats import (
    Alternative,
    HypothesisSpec,
    Method,
    evaluate_hypothesis,
    percent_change,
    standard_hypotheses,
    wilcoxon_signed_rank,
)


def brute_force_p(ranks, w, alternative):
    """Independent oracle: literally enumerate every sign assignment."""
    hits = 0
    n = len(ranks)
    for mask in itertools.product((0, 1), repeat=n):
        s = sum(r for r, m in zip(ranks, mask) if m)
        if alternative is Alternative.GREATER and s >= w:
            hits += 1
        elif alternative is Alternative.LESS and s <= w:
            hits += 1
    return hits / 2**n


class TestExactPath:
    def test_twenty_all_positive_distinct(self):
        # Reference case: every difference positive, W = 210, p = 2^-20.
        x = [float(100 + i) for i in range(1, 21)]
        y = [100.0] * 20
        result = wilcoxon_signed_rank(x, y, Alternative.GREATER)
        assert result.w_statistic == 210
        assert result.method is Method.EXACT
        assert abs(result.p_value - 9.5367431640625e-07) < 1e-12

    def test_ten_all_positive_distinct(self):
        x = [float(10 + i) for i in range(1, 11)]
        y = [10.0] * 10
        result = wilcoxon_signed_rank(x, y, Alternative.GREATER)
        assert result.w_statistic == 55
        assert abs(result.p_value - 0.0009765625) < 1e-12

    def test_three_pairs_mixed_signs(self):
        # d = [1, -2, 3]; |d| ranks 1, 2, 3; W = 1 + 3 = 4; p = 3/8 by
        # enumerating the 8 sign assignments.
        result = wilcoxon_signed_rank([1, -2, 3], [0, 0, 0], Alternative.GREATER)
        assert result.w_statistic == 4
        assert result.p_value == pytest.approx(0.375, abs=1e-15)

    def test_w_35_of_10_rounds_to_quarter(self):
        # Frozen from the brute-force oracle: P(W >= 35 | n=10) = 0.24609375.
        ranks = list(range(1, 11))
        assert brute_force_p(ranks, 35, Alternative.GREATER) == 0.24609375
        diffs = [-1, -2, 3, -4, 5, -6, -7, 8, 9, 10]  # + ranks: 3+5+8+9+10
        x = [float(d) for d in diffs]
        y = [0.0] * 10
        result = wilcoxon_signed_rank(x, y, Alternative.GREATER)
        assert result.w_statistic == 35
        assert result.p_value == pytest.approx(0.24609375, abs=1e-12)
        assert round(result.p_value, 2) == 0.25

    def test_matches_brute_force_on_random_small_instances(self):
        rng = random.Random(7)
        for _ in range(25):
            n = rng.randint(1, 10)
            x = [rng.uniform(-5, 5) for _ in range(n)]
            y = [rng.uniform(-5, 5) for _ in range(n)]
            diffs = [a - b for a, b in zip(x, y) if a != b]
            if not diffs:
                continue
            for alt in Alternative:
                result = wilcoxon_signed_rank(x, y, alt)
                # rebuild the ranks the test used
                mags = sorted(abs(d) for d in diffs)
                ranks = [
                    (mags.index(abs(d)) + mags.count(abs(d)) / 2 + 0.5)
                    for d in diffs
                ]
                expected = brute_force_p(ranks, result.w_statistic, alt)
                assert result.p_value == pytest.approx(expected, abs=1e-12)

    def test_ties_get_average_ranks(self):
        # d = [2, 2, -3]: |d| ranks (1.5, 1.5, 3), W = 3.
        result = wilcoxon_signed_rank([2, 2, -3], [0, 0, 0], Alternative.GREATER)
        assert result.w_statistic == pytest.approx(3.0)
        expected = brute_force_p([1.5, 1.5, 3.0], 3.0, Alternative.GREATER)
        assert result.p_value == pytest.approx(expected, abs=1e-12)

    def test_zero_differences_dropped(self):
        result = wilcoxon_signed_rank([1, 5, 3], [1, 2, 1], Alternative.GREATER)
        assert result.n_effective == 2

    def test_all_zero_differences_raise(self):
        with pytest.raises(AllZeroDifferences):
            wilcoxon_signed_rank([1.0, 2.0], [1.0, 2.0], Alternative.GREATER)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            wilcoxon_signed_rank([1, 2], [1], Alternative.GREATER)
        with pytest.raises(LengthMismatch):
            wilcoxon_signed_rank([], [], Alternative.GREATER)


class TestAgainstScipy:
    """scipy's implementation is an independent cross-check on tie-free data."""

    def test_exact_agreement(self):
        scipy_stats = pytest.importorskip("scipy.stats")
        rng = random.Random(42)
        for _ in range(40):
            n = rng.randint(6, 24)
            x = [rng.gauss(0.5, 2) for _ in range(n)]
            y = [rng.gauss(0.0, 2) for _ in range(n)]
            diffs = [a - b for a, b in zip(x, y)]
            mags = [abs(d) for d in diffs]
            if len(set(mags)) != len(mags) or any(d == 0 for d in diffs):
                continue
            for alt, name in ((Alternative.GREATER, "greater"),
                              (Alternative.LESS, "less")):
                ours = wilcoxon_signed_rank(x, y, alt)
                ref = scipy_stats.wilcoxon(x, y, alternative=name,
                                           method="exact")
                assert ours.p_value == pytest.approx(ref.pvalue, rel=1e-10)

    def test_normal_path_agreement(self):
        scipy_stats = pytest.importorskip("scipy.stats")
        rng = random.Random(11)
        for _ in range(20):
            n = rng.randint(26, 60)  # beyond the exact threshold
            x = [rng.gauss(0.3, 2) for _ in range(n)]
            y = [rng.gauss(0.0, 2) for _ in range(n)]
            ours = wilcoxon_signed_rank(x, y, Alternative.GREATER)
            assert ours.method is Method.NORMAL_APPROX
            ref = scipy_stats.wilcoxon(
                x, y, alternative="greater", method="approx", correction=True
            )
            assert ours.p_value == pytest.approx(ref.pvalue, rel=1e-8)


class TestProperties:
    @given(st.integers(3, 20))
    def test_two_to_minus_n_law(self, n):
        x = [float(i) for i in range(1, n + 1)]
        y = [0.0] * n
        result = wilcoxon_signed_rank(x, y, Alternative.GREATER)
        assert result.w_statistic == n * (n + 1) / 2
        assert result.p_value == pytest.approx(2.0**-n, rel=1e-12)

    @settings(max_examples=60)
    @given(st.lists(
        st.tuples(st.integers(-1000, 1000), st.integers(-1000, 1000)),
        min_size=1, max_size=24,
    ))
    def test_symmetry(self, pairs):
        x = [float(a) for a, _ in pairs]
        y = [float(b) for _, b in pairs]
        if all(a == b for a, b in pairs):
            return
        forward = wilcoxon_signed_rank(x, y, Alternative.GREATER)
        backward = wilcoxon_signed_rank(y, x, Alternative.LESS)
        assert abs(forward.p_value - backward.p_value) < 1e-12

    def test_exact_vs_normal_agreement(self):
        rng = random.Random(3)
        checked = 0
        while checked < 100:
            n = rng.randint(10, 25)
            diffs = rng.sample(range(1, 2000), n)
            signs = [rng.choice((-1, 1)) for _ in range(n)]
            x = [float(d * s) for d, s in zip(diffs, signs)]
            y = [0.0] * n
            exact = wilcoxon_signed_rank(x, y, Alternative.GREATER)
            assert exact.method is Method.EXACT
            from optprune.stats import _average_ranks, _normal_tail
            ranks = _average_ranks([abs(v) for v in x])
            approx = _normal_tail(ranks, exact.w_statistic, Alternative.GREATER)
            assert abs(exact.p_value - approx) < 0.01
            checked += 1

    def test_p_in_unit_interval(self):
        result = wilcoxon_signed_rank([-1, -2, -3], [0, 0, 0], Alternative.GREATER)
        assert result.p_value == 1.0  # P(W >= 0) over all assignments
        result = wilcoxon_signed_rank([1, 2, 3], [0, 0, 0], Alternative.LESS)
        assert result.p_value == 1.0


class TestPercentChange:
    def test_basic(self):
        assert percent_change(100, 95) == pytest.approx(-5.0)

    def test_identity(self):
        assert percent_change(123.4, 123.4) == 0.0

    def test_zero_baseline(self):
        with pytest.raises(ZeroBaseline):
            percent_change(0, 5)

    def test_round_trip_back_computation(self):
        # Reconstruct a specialized size from a known reduction and check
        # the reported change round-trips.
        baseline = 3_096_176
        specialized = baseline * (1 - 0.05416)
        assert percent_change(baseline, specialized) == pytest.approx(
            -5.416, abs=1e-3
        )

    @given(
        st.floats(1e-3, 1e9), st.floats(-0.99, 0.99)
    )
    def test_round_trip_property(self, baseline, fraction):
        specialized = baseline * (1 + fraction)
        pct = percent_change(baseline, specialized)
        assert abs(pct - fraction * 100) < 1e-3


class TestHypotheses:
    def test_reject_when_all_reduced(self):
        spec = HypothesisSpec("H01", "size", Alternative.GREATER, 0.05)
        baseline = [1000.0] * 20
        specialized = [1000.0 - i for i in range(1, 21)]
        outcome = evaluate_hypothesis(spec, baseline, specialized)
        assert outcome.reject
        assert outcome.result.w_statistic == 210

    def test_no_reject_for_w_35_n_10(self):
        spec = HypothesisSpec("H02", "gadgets", Alternative.GREATER, 0.05)
        diffs = [-1, -2, 3, -4, 5, -6, -7, 8, 9, 10]
        baseline = [100.0 + d for d in diffs]
        specialized = [100.0] * 10
        outcome = evaluate_hypothesis(spec, baseline, specialized)
        assert outcome.result.w_statistic == 35
        assert outcome.result.p_value == pytest.approx(0.24609375, abs=1e-9)
        assert not outcome.reject

    def test_identical_vectors_flagged_undefined(self):
        spec = HypothesisSpec("H03-bitrate", "bitrate", Alternative.LESS, 0.05)
        outcome = evaluate_hypothesis(spec, [1.0, 2.0], [1.0, 2.0])
        assert outcome.undefined
        assert not outcome.reject
        assert outcome.result is None

    def test_standard_set_directions(self):
        specs = {s.id: s for s in standard_hypotheses(["time", "bitrate"], 0.05)}
        assert specs["H01"].alternative is Alternative.GREATER
        assert specs["H02"].alternative is Alternative.GREATER
        assert specs["H03-time"].alternative is Alternative.GREATER
        assert specs["H03-bitrate"].alternative is Alternative.LESS


def test_exact_runtime_budget():
    # The n=25 exact path must be far under a second.
    import time

    x = [float(i) for i in range(1, 26)]
    y = [0.0] * 25
    start = time.perf_counter()
    result = wilcoxon_signed_rank(x, y, Alternative.GREATER)
    elapsed = time.perf_counter() - start
    assert result.method is Method.EXACT
    assert result.p_value == pytest.approx(2.0**-25, rel=1e-9)
    assert elapsed < 1.0
