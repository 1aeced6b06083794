"""Weighted physician rubric for generated-content quality."""

from __future__ import annotations

from ..errors import ValidationError

WEIGHTS = {
    "accuracy": 0.4,
    "relevance": 0.3,
    "readability": 0.2,
    "user_friendliness": 0.1,
}


def rubric_score(
    accuracy: float, relevance: float, readability: float, user_friendliness: float
) -> float:
    """0.4*accuracy + 0.3*relevance + 0.2*readability + 0.1*user_friendliness."""
    facets = {
        "accuracy": accuracy,
        "relevance": relevance,
        "readability": readability,
        "user_friendliness": user_friendliness,
    }
    for name, value in facets.items():
        if not 0.0 <= value <= 100.0:
            raise ValidationError(f"{name} must be in [0, 100], got {value}")
    return sum(WEIGHTS[name] * value for name, value in facets.items())
