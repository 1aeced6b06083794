"""Pluggable text-generator contract.

Production deployments plug a hosted language model in behind this
contract; tests and the default wiring use the deterministic template
filler so every output is reproducible. Calls are bounded by a deadline;
callers degrade per their own error contracts when it is exceeded.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor, TimeoutError as FutureTimeout
from dataclasses import dataclass, field
from typing import Any, Protocol


@dataclass(frozen=True)
class GenerationRequest:
    instruction: str
    slots: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class GenerationResponse:
    text: str


class TextGenerator(Protocol):
    def generate(self, request: GenerationRequest) -> GenerationResponse: ...


class GenerationError(Exception):
    pass


class TemplateGenerator:
    """Deterministic slot-template reference generator."""

    def generate(self, request: GenerationRequest) -> GenerationResponse:
        slots = request.slots
        if request.instruction.startswith("assessment_section"):
            lines = [str(line) for line in slots.get("lines", [])]
            return GenerationResponse(text="\n".join(lines))
        if request.instruction == "qa_answer":
            bits = []
            context_terms = slots.get("context_terms", [])
            if context_terms:
                bits.append("Considering your records (" + ", ".join(context_terms) + "):")
            for explanation in slots.get("explanations", []):
                bits.append(str(explanation))
            return GenerationResponse(text=" ".join(bits))
        # unknown instruction: echo the slots in a stable order
        rendered = "; ".join(f"{k}={slots[k]}" for k in sorted(slots))
        return GenerationResponse(text=rendered)


class FailingGenerator:
    """Test double that always fails; exercises degradation paths."""

    def generate(self, request: GenerationRequest) -> GenerationResponse:
        raise GenerationError("generator unavailable")


def bounded_generate(
    generator: TextGenerator,
    request: GenerationRequest,
    timeout_s: float | None = None,
) -> GenerationResponse:
    """Run the generator with a wall-clock bound; raises GenerationError."""
    if timeout_s is None:
        try:
            return generator.generate(request)
        except Exception as exc:
            raise GenerationError(str(exc)) from exc
    with ThreadPoolExecutor(max_workers=1) as pool:
        future = pool.submit(generator.generate, request)
        try:
            return future.result(timeout=timeout_s)
        except FutureTimeout:
            future.cancel()
            raise GenerationError(f"generator exceeded {timeout_s}s deadline") from None
        except Exception as exc:
            raise GenerationError(str(exc)) from exc
