"""System Usability Scale scoring.

Standard SUS: odd items are positively worded and contribute (score - 1),
even items are negatively worded and contribute (5 - score); the sum is
scaled by 2.5 onto 0..100. Item values may be non-integral so that a
vector of per-item means scores directly (SUS is linear, so the score of
the means equals the mean of the scores).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..errors import ValidationError

N_ITEMS = 10


@dataclass(frozen=True)
class SusResponse:
    items: tuple[float, ...]

    def __post_init__(self):
        if len(self.items) != N_ITEMS:
            raise ValidationError(f"SUS responses have exactly {N_ITEMS} items")
        for value in self.items:
            if not 1.0 <= value <= 5.0:
                raise ValidationError("SUS item scores must be in [1, 5]")


def sus_score(response: SusResponse | Sequence[float]) -> float:
    """Map ten 1..5 item scores onto the 0..100 SUS scale."""
    items = response.items if isinstance(response, SusResponse) else SusResponse(tuple(response)).items
    total = 0.0
    for index, value in enumerate(items, start=1):
        total += (value - 1.0) if index % 2 == 1 else (5.0 - value)
    return total * 2.5
