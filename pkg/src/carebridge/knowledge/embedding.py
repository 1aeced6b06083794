"""Deterministic reference text embedding.

Hashed bag-of-tokens: the folded text is split on whitespace/punctuation,
each token is hashed into one of DIM buckets with count accumulation, and
the vector is L2-normalized. Identical text always yields an identical
vector, so retrieval tests need no model weights. Real semantic encoders
plug in behind the same signature.
"""

from __future__ import annotations

import hashlib
import re

import numpy as np

from .matching import fold_text

DIM = 256

_TOKEN_RE = re.compile(r"\w+", re.UNICODE)


def _bucket(token: str) -> int:
    digest = hashlib.blake2b(token.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big") % DIM


def embed(text: str) -> np.ndarray:
    """Embed text into a unit vector of dimension DIM (all-zero for empty text)."""
    vec = np.zeros(DIM, dtype=np.float64)
    for token in _TOKEN_RE.findall(fold_text(text)):
        vec[_bucket(token)] += 1.0
    norm = float(np.linalg.norm(vec))
    if norm > 0.0:
        vec /= norm
    return vec
