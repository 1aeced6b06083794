"""Generate the committed 200-sentence term-recognition corpus.

Each sentence embeds 1..3 unambiguous surface forms from the bundled
fixture graph between neutral filler phrases. Ground truth comes from the
construction itself (we know exactly where each form was inserted) and is
double-checked against an independent brute-force scan before a sentence
is accepted, so no sentence survives in which fillers collide or adjacent
text extends a form into a longer one.

Run from the repository root:

    python3 tools/gen_term_corpus.py > tests/data/term_corpus.jsonl
"""

from __future__ import annotations

import json
import random
import sys
import unicodedata
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parents[1] / "tests"))

from carebridge.knowledge import fixture_graph
from carebridge.knowledge.matching import fold_text
from oracles import match_oracle

SENTENCES = 200
SEED = 20250610

PREFIXES = [
    "the clinic note says",
    "yesterday we talked about",
    "please keep an eye on",
    "the nurse mentioned",
    "my neighbor keeps asking about",
    "today's topic was",
    "remember to review",
    "the booklet has a page on",
    "we spent ten minutes on",
    "next visit will cover",
]
MIDDLES = [
    "and also",
    "together with",
    "and then",
    "as well as",
    "plus",
    "alongside",
]
SUFFIXES = [
    "before the next visit.",
    "every single day.",
    "when you get home.",
    "with your family.",
    "at the township clinic.",
    "if anything changes.",
]


def one_char_foldable(text: str) -> bool:
    # keeps original offsets equal to normalized offsets
    return all(len(unicodedata.normalize("NFKC", ch).casefold()) == 1 for ch in text)


def main() -> None:
    graph = fixture_graph()
    folded_forms = {}
    for node in graph.nodes.values():
        for surface in node.surface_forms:
            folded_forms.setdefault(fold_text(surface), set()).add(node.id)
    all_folded = set(folded_forms)

    # unambiguous forms only: exactly one owning node
    candidates = []
    for node in graph.nodes.values():
        for surface in node.surface_forms:
            if len(folded_forms[fold_text(surface)]) == 1 and one_char_foldable(surface):
                candidates.append((surface, node.id))
    candidates.sort()

    for phrase in PREFIXES + MIDDLES + SUFFIXES:
        if match_oracle(phrase, all_folded):
            raise SystemExit(f"filler phrase collides with a surface form: {phrase!r}")

    rng = random.Random(SEED)
    lines = []
    while len(lines) < SENTENCES:
        k = rng.randint(1, 3)
        picks = rng.sample(candidates, k)
        parts = [rng.choice(PREFIXES)]
        expected = []
        text = parts[0] + " "
        for i, (surface, node_id) in enumerate(picks):
            start = len(text)
            text += surface
            expected.append([start, start + len(surface), node_id, fold_text(surface)])
            text += " " + (rng.choice(MIDDLES) + " " if i < k - 1 else rng.choice(SUFFIXES))
        text = text.rstrip()
        if not one_char_foldable(text):
            continue
        oracle = match_oracle(text, all_folded)
        constructed = [(a, b, s) for a, b, _, s in expected]
        if oracle != constructed:
            continue  # a filler join produced a different match; drop the draw
        lines.append({"text": text, "expected": expected})

    for line in lines:
        sys.stdout.write(json.dumps(line, ensure_ascii=False, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
