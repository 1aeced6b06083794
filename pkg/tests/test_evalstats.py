import math
import random

import pytest
import scipy.stats

from carebridge.errors import ValidationError
from carebridge.evalstats import (
    KnowledgeTest,
    SummaryStats,
    SusResponse,
    balanced_split,
    mann_whitney_u,
    normality_heuristic,
    rubric_score,
    score_test,
    student_t_two_sided_p,
    sus_score,
    welch_t_from_summary,
)

from oracles import mann_whitney_enumeration, pairwise_u

# item means from the usability survey table (ten 1..5 items)
SUS_TABLE_MEANS = (4.8, 1.2, 4.5, 1.2, 4.6, 1.0, 4.6, 1.2, 4.6, 1.1)


def default_key():
    return ["a"] * 27


class TestScoreTest:
    def test_maximum(self):
        assert score_test(["a"] * 27, default_key(), 23.0) == 50.0

    def test_minimum(self):
        assert score_test(["b"] * 27, default_key(), 0.0) == 0.0

    def test_partial(self):
        responses = ["a"] * 20 + ["b"] * 7
        assert score_test(responses, default_key(), 12.8) == pytest.approx(32.8)

    def test_open_score_bounds(self):
        with pytest.raises(ValidationError):
            score_test(["a"] * 27, default_key(), 23.5)
        with pytest.raises(ValidationError):
            score_test(["a"] * 27, default_key(), -0.1)

    def test_response_count_checked(self):
        with pytest.raises(ValidationError):
            score_test(["a"] * 26, default_key(), 0.0)

    def test_custom_weights_must_keep_max_50(self):
        with pytest.raises(ValidationError):
            KnowledgeTest(weights=(2.0,) * 27, open_max=23.0)
        test = KnowledgeTest(weights=(1.0,) * 27, open_max=23.0)
        assert score_test(["a"] * 27, default_key(), 23.0, test) == 50.0

    def test_monotone_in_correct_answers(self):
        rng = random.Random(1)
        key = default_key()
        responses = ["b"] * 27
        last = score_test(responses, key, 5.0)
        order = list(range(27))
        rng.shuffle(order)
        for i in order:
            responses[i] = "a"
            now = score_test(responses, key, 5.0)
            assert now >= last
            last = now

    def test_case_insensitive_grading(self):
        assert score_test(["A"] * 27, default_key(), 0.0) == 27.0


class TestBalancedSplit:
    def test_serpentine_on_four(self):
        result = balanced_split([10, 9, 8, 7])
        assert sorted(result.groups[0]) == [7, 10]
        assert sorted(result.groups[1]) == [8, 9]
        assert result.means == [8.5, 8.5]

    def test_all_equal_scores(self):
        result = balanced_split([5.0] * 10)
        assert result.means[0] == result.means[1] == 5.0

    def test_group_sizes_within_one(self):
        rng = random.Random(3)
        for n in range(2, 41):
            for k in (2, 3, 4):
                if n < k:
                    continue
                scores = [rng.uniform(0, 50) for _ in range(n)]
                result = balanced_split(scores, k)
                sizes = [len(g) for g in result.groups]
                assert max(sizes) - min(sizes) <= 1

    def test_mean_difference_bound_on_random_draws(self):
        rng = random.Random(20240615)
        for _ in range(2000):
            scores = [rng.uniform(0, 50) for _ in range(40)]
            result = balanced_split(scores)
            spread = max(scores) - min(scores)
            assert abs(result.means[0] - result.means[1]) <= spread / 10

    def test_fewer_scores_than_groups(self):
        with pytest.raises(ValidationError):
            balanced_split([1.0], k=2)


class TestStudentTailFunction:
    def test_matches_scipy_within_1e6(self):
        for df in (1, 2, 3.7, 5, 12, 35.3, 38, 120, 500):
            for t in (0.0, 0.1, 0.33, 1.0, 1.96, 2.5, 4.27, 8.0):
                mine = student_t_two_sided_p(t, df)
                reference = 2 * scipy.stats.t.sf(abs(t), df)
                assert abs(mine - reference) < 1e-6, (t, df)


class TestWelch:
    def test_identical_summaries(self):
        s = SummaryStats(mean=10.0, sd=2.0, n=20)
        out = welch_t_from_summary(s, s)
        assert out["t"] == 0.0 and out["p_two_sided"] == 1.0

    def test_study_row_before_initial_visit(self):
        out = welch_t_from_summary(SummaryStats(32.8, 6.5, 20), SummaryStats(32.2, 4.9, 20))
        assert 0.70 <= out["p_two_sided"] <= 0.78

    def test_study_row_after_initial_visit(self):
        out = welch_t_from_summary(SummaryStats(38.3, 5.0, 20), SummaryStats(35.9, 4.5, 20))
        assert 0.10 <= out["p_two_sided"] <= 0.14

    def test_study_row_before_follow_up(self):
        out = welch_t_from_summary(SummaryStats(42.2, 3.6, 20), SummaryStats(36.4, 4.9, 20))
        assert out["p_two_sided"] < 0.001

    def test_study_row_after_follow_up(self):
        out = welch_t_from_summary(SummaryStats(45.6, 2.2, 20), SummaryStats(40.0, 4.3, 20))
        assert out["p_two_sided"] < 0.001

    def test_matches_scipy_from_stats(self):
        rng = random.Random(7)
        for _ in range(100):
            a = SummaryStats(rng.uniform(0, 50), rng.uniform(0.5, 10), rng.randint(2, 60))
            b = SummaryStats(rng.uniform(0, 50), rng.uniform(0.5, 10), rng.randint(2, 60))
            mine = welch_t_from_summary(a, b)
            t_ref, p_ref = scipy.stats.ttest_ind_from_stats(
                a.mean, a.sd, a.n, b.mean, b.sd, b.n, equal_var=False
            )
            assert mine["t"] == pytest.approx(t_ref, abs=1e-9)
            assert mine["p_two_sided"] == pytest.approx(p_ref, abs=1e-6)

    def test_swap_symmetry(self):
        a = SummaryStats(40.0, 5.0, 15)
        b = SummaryStats(35.0, 6.0, 18)
        ab = welch_t_from_summary(a, b)
        ba = welch_t_from_summary(b, a)
        assert ab["t"] == pytest.approx(-ba["t"])
        assert ab["p_two_sided"] == pytest.approx(ba["p_two_sided"])

    def test_zero_variance_conventions(self):
        same = welch_t_from_summary(SummaryStats(5.0, 0.0, 5), SummaryStats(5.0, 0.0, 5))
        assert same["p_two_sided"] == 1.0
        different = welch_t_from_summary(SummaryStats(6.0, 0.0, 5), SummaryStats(5.0, 0.0, 5))
        assert different["p_two_sided"] == 0.0


class TestMannWhitney:
    def test_identical_multisets(self):
        out = mann_whitney_u([1, 2, 3], [1, 2, 3])
        assert out["U"] == 4.5  # n^2 / 2
        assert out["p_two_sided"] > 0.9

    def test_complete_separation(self):
        out = mann_whitney_u([1, 2, 3], [4, 5, 6])
        assert out["U"] == 0.0

    def test_empty_sample_rejected(self):
        with pytest.raises(ValidationError):
            mann_whitney_u([], [1])

    def test_exact_equals_enumeration_oracle_random_pairs(self):
        rng = random.Random(11)
        for _ in range(30):
            n1 = rng.randint(1, 6)
            n2 = rng.randint(1, 6)
            a = [rng.randint(0, 8) for _ in range(n1)]  # small ints force ties
            b = [rng.randint(0, 8) for _ in range(n2)]
            mine = mann_whitney_u(a, b, exact=True)
            assert mine["U"] == pytest.approx(pairwise_u(a, b))
            expected = mann_whitney_enumeration(a + b, n1, mine["U"])
            assert mine["p_two_sided"] == pytest.approx(expected, abs=1e-12)

    def test_auto_mode_picks_exact_for_small_samples(self):
        assert mann_whitney_u([1, 2], [3, 4])["method"] == "exact"
        assert mann_whitney_u(list(range(9)), list(range(9)))["method"] == "normal"

    def test_normal_path_close_to_scipy(self):
        rng = random.Random(13)
        for _ in range(25):
            a = [rng.gauss(0, 1) for _ in range(30)]
            b = [rng.gauss(0.4, 1.2) for _ in range(25)]
            mine = mann_whitney_u(a, b, exact=False)
            ref = scipy.stats.mannwhitneyu(a, b, alternative="two-sided", method="asymptotic")
            assert mine["U"] == pytest.approx(ref.statistic)
            assert mine["p_two_sided"] == pytest.approx(ref.pvalue, abs=1e-9)

    def test_all_values_identical(self):
        out = mann_whitney_u([2.0] * 10, [2.0] * 10, exact=False)
        assert out["p_two_sided"] == 1.0


class TestNormalityHeuristic:
    def test_symmetric_sample_is_normal(self):
        sample = [-2, -1, 0, 0, 0, 0, 1, 2]
        out = normality_heuristic(sample)
        assert out["normal"] is True
        assert out["skew"] == pytest.approx(0.0, abs=1e-12)

    def test_one_sided_sample_not_normal(self):
        sample = [1, 1, 1, 1, 1, 1, 1, 100]
        out = normality_heuristic(sample)
        # skew computed longhand from the moment formula
        n = len(sample)
        mean = sum(sample) / n
        m2 = sum((x - mean) ** 2 for x in sample) / n
        m3 = sum((x - mean) ** 3 for x in sample) / n
        assert out["skew"] == pytest.approx(m3 / m2**1.5)
        assert abs(out["skew"]) > 1
        assert out["normal"] is False

    def test_small_sample_rejected(self):
        with pytest.raises(ValidationError):
            normality_heuristic([1, 2, 3, 4, 5])

    def test_matches_scipy_moments(self):
        rng = random.Random(17)
        sample = [rng.gauss(5, 2) for _ in range(50)]
        out = normality_heuristic(sample)
        assert out["skew"] == pytest.approx(scipy.stats.skew(sample), abs=1e-9)
        assert out["excess_kurtosis"] == pytest.approx(scipy.stats.kurtosis(sample), abs=1e-9)

    def test_constant_sample(self):
        out = normality_heuristic([3.0] * 10)
        assert out == {"normal": True, "skew": 0.0, "excess_kurtosis": 0.0}


class TestSus:
    def test_maximum_pattern(self):
        assert sus_score([5, 1, 5, 1, 5, 1, 5, 1, 5, 1]) == 100.0

    def test_all_threes(self):
        assert sus_score([3] * 10) == 50.0

    def test_table_of_item_means_scores_93_5(self):
        assert sus_score(SUS_TABLE_MEANS) == pytest.approx(93.5, abs=0.1)

    def test_reversal_maps_to_complement(self):
        rng = random.Random(23)
        for _ in range(50):
            items = [rng.randint(1, 5) for _ in range(10)]
            reversed_items = [6 - v for v in items]
            assert sus_score(items) + sus_score(reversed_items) == pytest.approx(100.0)

    def test_linear_in_each_item(self):
        base = [3.0] * 10
        for i in range(10):
            bumped = list(base)
            bumped[i] = 4.0
            delta = sus_score(bumped) - sus_score(base)
            assert abs(delta) == pytest.approx(2.5)

    def test_validation(self):
        with pytest.raises(ValidationError):
            sus_score([0] + [3] * 9)
        with pytest.raises(ValidationError):
            SusResponse(tuple([3] * 9))


class TestRubric:
    def test_all_hundred(self):
        assert rubric_score(100, 100, 100, 100) == 100.0

    def test_weight_extraction(self):
        assert rubric_score(100, 0, 0, 0) == pytest.approx(40.0)
        assert rubric_score(0, 100, 0, 0) == pytest.approx(30.0)
        assert rubric_score(0, 0, 100, 0) == pytest.approx(20.0)
        assert rubric_score(0, 0, 0, 100) == pytest.approx(10.0)

    def test_constancy(self):
        for c in (0, 12.5, 50, 99):
            assert rubric_score(c, c, c, c) == pytest.approx(c)

    def test_out_of_range(self):
        with pytest.raises(ValidationError):
            rubric_score(101, 0, 0, 0)
        with pytest.raises(ValidationError):
            rubric_score(50, -1, 0, 0)
