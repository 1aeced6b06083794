"""Knowledge-test scoring and balanced group assignment.

The test has 27 objective items (23 multiple choice + 4 true/false) plus
one open question scored by a clinician. Default weights give each
objective item one point and the open item up to 23, for a maximum of 50;
any reweighting must keep that maximum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..errors import ValidationError

MAX_TOTAL = 50.0
N_MULTIPLE_CHOICE = 23
N_TRUE_FALSE = 4
N_OBJECTIVE = N_MULTIPLE_CHOICE + N_TRUE_FALSE
DEFAULT_OPEN_MAX = 23.0


@dataclass(frozen=True)
class KnowledgeTest:
    weights: tuple[float, ...] = field(default_factory=lambda: (1.0,) * N_OBJECTIVE)
    open_max: float = DEFAULT_OPEN_MAX

    def __post_init__(self):
        if len(self.weights) != N_OBJECTIVE:
            raise ValidationError(f"expected {N_OBJECTIVE} objective item weights")
        if any(w < 0 for w in self.weights):
            raise ValidationError("weights must be >= 0")
        total = sum(self.weights) + self.open_max
        if abs(total - MAX_TOTAL) > 1e-9:
            raise ValidationError(f"maximum total must be {MAX_TOTAL}, got {total}")


def score_test(
    responses: Sequence[str],
    key: Sequence[str],
    open_score: float,
    test: KnowledgeTest | None = None,
) -> float:
    """Weighted objective score plus the externally-scored open item."""
    test = test or KnowledgeTest()
    if len(key) != N_OBJECTIVE:
        raise ValidationError(f"answer key must have {N_OBJECTIVE} items")
    if len(responses) != len(key):
        raise ValidationError(f"expected {len(key)} responses, got {len(responses)}")
    if not 0 <= open_score <= test.open_max:
        raise ValidationError(f"open score must be in [0, {test.open_max}]")
    objective = sum(
        w for w, response, correct in zip(test.weights, responses, key)
        if str(response).strip().casefold() == str(correct).strip().casefold()
    )
    return objective + open_score


@dataclass
class SplitResult:
    assignment: list[int]  # group index per input position
    groups: list[list[float]]
    means: list[float]


def balanced_split(scores: Sequence[float], k: int = 2) -> SplitResult:
    """Serpentine assignment of the descending-sorted scores.

    With k = 2 the pattern over sorted positions is A B B A A B B A ...,
    which keeps group means close and sizes within one of each other.
    """
    if k < 1:
        raise ValidationError("k must be >= 1")
    if len(scores) < k:
        raise ValidationError("need at least one score per group")
    order = sorted(range(len(scores)), key=lambda i: (-scores[i], i))
    assignment = [0] * len(scores)
    groups: list[list[float]] = [[] for _ in range(k)]
    for position, original_index in enumerate(order):
        cycle = position % (2 * k)
        group = cycle if cycle < k else 2 * k - 1 - cycle
        assignment[original_index] = group
        groups[group].append(scores[original_index])
    means = [sum(g) / len(g) if g else 0.0 for g in groups]
    return SplitResult(assignment=assignment, groups=groups, means=means)
