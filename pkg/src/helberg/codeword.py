"""Words over ``{0, ..., q-1}``: validation, moments, congruence and text form.

Words are plain tuples of ints. A *moment* is the weighted symbol sum
``M(x) = w_1 x_1 + ... + w_k x_k``.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .params import CodeParams

Word = tuple[int, ...]


def as_word(symbols: Iterable[int], q: int, length: int | None = None) -> Word:
    """Coerce ``symbols`` to a tuple and check every symbol lies in ``[0, q)``."""
    word = tuple(int(s) for s in symbols)
    for i, s in enumerate(word, start=1):
        if not 0 <= s < q:
            raise ValueError(f"symbol {s} at position {i} is outside 0..{q - 1}")
    if length is not None and len(word) != length:
        raise ValueError(f"expected a word of length {length}, got {len(word)}")
    return word


def moment(params: CodeParams, w: Sequence[int]) -> int:
    word = as_word(w, params.q)
    if len(word) > params.n:
        raise ValueError(f"word of length {len(word)} is longer than n={params.n}")
    return sum(wt * s for wt, s in zip(params.weights, word))


def truncated_moment(params: CodeParams, w: Sequence[int], k: int) -> int:
    """Moment of the first ``k`` symbols of ``w``."""
    if not 0 <= k <= len(w):
        raise ValueError(f"k={k} out of range for a word of length {len(w)}")
    return moment(params, w[:k])


def delta(params: CodeParams, x: Sequence[int], y: Sequence[int]) -> int:
    _same_length(params, x, y)
    return moment(params, x) - moment(params, y)


def congruent(params: CodeParams, x: Sequence[int], y: Sequence[int]) -> bool:
    return delta(params, x, y) % params.m == 0


def _same_length(params: CodeParams, x: Sequence[int], y: Sequence[int]) -> None:
    if len(x) != params.n or len(y) != params.n:
        raise ValueError(f"both words must have length n={params.n}, got {len(x)} and {len(y)}")


def parse_word(text: str, q: int | None = None) -> Word:
    """Parse ``"12202212"`` or ``"1,2,2,0"``; commas are required once ``q > 10``."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        parts = [t.strip() for t in text.split(",")]
        if any(not t.isdigit() for t in parts):
            raise ValueError(f"malformed word {text!r}")
        word = tuple(int(t) for t in parts)
    else:
        if q is not None and q > 10 and len(text) > 1:
            raise ValueError("words over alphabets larger than 10 must be comma-separated")
        if not text.isdigit():
            raise ValueError(f"malformed word {text!r}")
        word = tuple(int(ch) for ch in text)
    return as_word(word, q) if q is not None else word


def format_word(word: Sequence[int], q: int) -> str:
    if q <= 10:
        return "".join(str(s) for s in word)
    return ",".join(str(s) for s in word)
