"""Deletion and insertion channels, and the index of a deleted word."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .codeword import Word, as_word, moment
from .params import CodeParams


@dataclass(frozen=True)
class DeletionPattern:
    """Sorted, duplicate-free 1-based positions to delete."""

    positions: tuple[int, ...] = ()

    def __init__(self, positions: Iterable[int] = ()):
        pos = tuple(sorted(int(p) for p in positions))
        if len(set(pos)) != len(pos):
            raise ValueError(f"duplicate positions in deletion pattern {pos}")
        if pos and pos[0] < 1:
            raise ValueError(f"positions are 1-based, got {pos[0]}")
        object.__setattr__(self, "positions", pos)

    def __len__(self) -> int:
        return len(self.positions)

    def __iter__(self):
        return iter(self.positions)

    def __str__(self) -> str:
        return ",".join(map(str, self.positions))

    @classmethod
    def parse(cls, text: str) -> "DeletionPattern":
        text = text.strip()
        if not text:
            return cls()
        try:
            return cls(int(t) for t in text.split(","))
        except ValueError as exc:
            raise ValueError(f"malformed deletion pattern {text!r}: {exc}") from None


def delete_at(x: Sequence[int], D: DeletionPattern | Iterable[int]) -> Word:
    if not isinstance(D, DeletionPattern):
        D = DeletionPattern(D)
    if D.positions and D.positions[-1] > len(x):
        raise ValueError(f"position {D.positions[-1]} exceeds word length {len(x)}")
    drop = set(D.positions)
    return tuple(s for i, s in enumerate(x, start=1) if i not in drop)


def insert_at(x: Sequence[int], entries: Iterable[tuple[int, int]], q: int | None = None) -> Word:
    """Insert ``(position, symbol)`` entries left to right.

    Each position is 1-based in the sequence as it stands after the previous
    insertions, so inserting the deleted symbols in ascending position order
    undoes :func:`delete_at`.
    """
    out = list(x)
    for pos, sym in entries:
        if not 1 <= pos <= len(out) + 1:
            raise ValueError(f"insert position {pos} invalid for length {len(out)}")
        if sym < 0 or (q is not None and sym >= q):
            raise ValueError(f"symbol {sym} outside the alphabet")
        out.insert(pos - 1, sym)
    return tuple(out)


def random_deletions(x: Sequence[int], c: int, seed: int | random.Random) -> tuple[Word, DeletionPattern]:
    """Delete a uniformly random ``c``-subset of positions, reproducibly from ``seed``."""
    if not 0 <= c <= len(x):
        raise ValueError(f"cannot delete {c} symbols from a word of length {len(x)}")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    D = DeletionPattern(rng.sample(range(1, len(x) + 1), c))
    return delete_at(x, D), D


def index_of(params: CodeParams, x: Sequence[int], xd: Sequence[int]) -> int:
    """Moment deficit ``M(x) - M(xd)``; non-negative whenever ``xd`` is a subsequence of ``x``."""
    return moment(params, as_word(x, params.q)) - moment(params, as_word(xd, params.q))


def is_subsequence(short: Sequence[int], long: Sequence[int]) -> bool:
    it = iter(long)
    return all(s in it for s in short)
