"""
Pair-shattering sets of binary sequences.

A set of k-sequences shatters every coordinate pair when all four patterns
00, 01, 10, 11 appear on each pair {i, j}.
"""

from __future__ import annotations

import logging
from itertools import combinations, product
from typing import Iterable, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

logger = logging.getLogger(__name__)

Sequence01 = tuple[int, ...]


def unshattered_pair(k: int, sequences: Iterable[Sequence01]) -> Optional[tuple[int, int]]:
    """First coordinate pair missing a pattern, or None."""
    seqs = list(sequences)
    for i, j in combinations(range(k), 2):
        if len({(x[i], x[j]) for x in seqs}) < 4:
            return i, j
    return None


def is_shattering(k: int, sequences: Iterable[Sequence01]) -> bool:
    return unshattered_pair(k, sequences) is None


class ShatteringSet(BaseModel):
    """Binary k-sequences realizing all four patterns on every coordinate pair."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=2, description="Sequence length")
    sequences: tuple[Sequence01, ...] = Field(description="Distinct sequences in lexicographic order")

    @model_validator(mode="after")
    def _shatters(self) -> "ShatteringSet":
        for x in self.sequences:
            if len(x) != self.k or any(b not in (0, 1) for b in x):
                raise ValueError(f"[ShatteringSet] {x} is not a binary sequence of length {self.k}")
        if len(set(self.sequences)) != len(self.sequences):
            raise ValueError("[ShatteringSet] repeated sequence")
        pair = unshattered_pair(self.k, self.sequences)
        if pair is not None:
            raise ValueError(f"[ShatteringSet] coordinates {pair} not shattered")
        return self

    def __len__(self) -> int:
        return len(self.sequences)


def base_sequences(k: int) -> list[Sequence01]:
    """All of {0,1}^2 for k=2, the even-weight set for k=3, nonzero even-weight for k>=4."""
    if k < 2:
        raise ValueError(f"[shattering_set] k must be >= 2, got {k}")
    every = list(product((0, 1), repeat=k))
    if k == 2:
        return every
    even = [x for x in every if sum(x) % 2 == 0]
    if k == 3:
        return even
    return even[1:]


def shattering_set(k: int, size: Optional[int] = None) -> ShatteringSet:
    """
    Build a shattering set of k-sequences, optionally padded to `size`.

    Padding adds the lexicographically least sequences not already present.

    Raises:
        ValueError: if k < 2 or size lies outside [base size, 2^k].
    """
    seqs = base_sequences(k)
    if size is not None:
        if size < len(seqs) or size > 2 ** k:
            raise ValueError(
                f"[shattering_set] size {size} outside [{len(seqs)}, {2 ** k}] for k={k}"
            )
        present = set(seqs)
        for x in product((0, 1), repeat=k):
            if len(seqs) >= size:
                break
            if x not in present:
                seqs.append(x)
                present.add(x)
    return ShatteringSet(k=k, sequences=tuple(sorted(seqs)))
