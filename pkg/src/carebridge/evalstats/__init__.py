from .knowledge_test import KnowledgeTest, SplitResult, balanced_split, score_test
from .inference import (
    SummaryStats,
    mann_whitney_u,
    normality_heuristic,
    student_t_two_sided_p,
    welch_t_from_summary,
)
from .sus import SusResponse, sus_score
from .rubric import rubric_score

__all__ = [
    "KnowledgeTest",
    "SplitResult",
    "balanced_split",
    "score_test",
    "SummaryStats",
    "mann_whitney_u",
    "normality_heuristic",
    "student_t_two_sided_p",
    "welch_t_from_summary",
    "SusResponse",
    "sus_score",
    "rubric_score",
]
