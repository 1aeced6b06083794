"""The study statistics toolkit end to end.

Run: python3 demos/06_study_statistics.py
"""

import random

from carebridge.evalstats import (
    SummaryStats,
    balanced_split,
    mann_whitney_u,
    normality_heuristic,
    rubric_score,
    score_test,
    sus_score,
    welch_t_from_summary,
)

# score a knowledge test: 27 objective items plus a clinician-scored open item
key = ["a"] * 27
responses = ["a"] * 20 + ["b"] * 7
print(f"test score: {score_test(responses, key, open_score=12.8)} / 50")

# split 40 baseline scores into two balanced groups
rng = random.Random(0)
scores = [round(rng.uniform(20, 45), 1) for _ in range(40)]
split = balanced_split(scores)
print(f"group means after serpentine split: {split.means[0]:.2f} vs {split.means[1]:.2f}")

# compare the groups from summary statistics
a = SummaryStats.from_sample(split.groups[0])
b = SummaryStats.from_sample(split.groups[1])
welch = welch_t_from_summary(a, b)
print(f"welch: t={welch['t']:+.3f} df={welch['df']:.1f} p={welch['p_two_sided']:.3f}")

# pick the test by the normality screen
screen = normality_heuristic(split.groups[0])
print(f"normality screen: normal={screen['normal']} skew={screen['skew']:+.2f}")
if not screen["normal"]:
    u = mann_whitney_u(split.groups[0], split.groups[1])
    print(f"mann-whitney fallback: U={u['U']} p={u['p_two_sided']:.3f} ({u['method']})")

# usability and content-quality scores
print(f"SUS of the published item means: {sus_score((4.8, 1.2, 4.5, 1.2, 4.6, 1.0, 4.6, 1.2, 4.6, 1.1))}")
print(f"rubric(92, 88, 90, 85) = {rubric_score(92, 88, 90, 85):.1f}")
