"""Codebook membership, enumeration, and the largest-code search over residues."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .codeword import Word, as_word, moment
from .errors import BudgetExceededError
from .params import CodeParams, make_params

DEFAULT_BUDGET = 10**7


def contains(params: CodeParams, x: Sequence[int]) -> bool:
    word = as_word(x, params.q, params.n)
    return moment(params, word) % params.m == params.r


def _check_budget(q: int, n: int, budget: int | None) -> None:
    budget = DEFAULT_BUDGET if budget is None else budget
    if q**n > budget:
        raise BudgetExceededError(f"{q}^{n} = {q**n} words exceeds the enumeration budget {budget}")


def all_moments(q: int, weights: Sequence[int], budget: int | None = None) -> np.ndarray:
    """Moments of every word of length ``len(weights)``, in lexicographic word order.

    Entry ``k`` belongs to the word whose base-``q`` digits (most significant
    first) spell ``k``.
    """
    n = len(weights)
    _check_budget(q, n, budget)
    dtype = np.int64 if (q - 1) * sum(weights) < 2**62 else object
    moments = np.zeros(1, dtype=dtype)
    symbols = np.arange(q, dtype=dtype)
    for w in weights:
        moments = (moments[:, None] + symbols[None, :] * w).reshape(-1)
    return moments


def _index_to_word(index: int, q: int, n: int) -> Word:
    digits = [0] * n
    for i in range(n - 1, -1, -1):
        index, digits[i] = divmod(index, q)
    return tuple(digits)


def enumerate_codebook(params: CodeParams, budget: int | None = None) -> Iterator[Word]:
    """Yield the members of the codebook in lexicographic order."""
    moments = all_moments(params.q, params.weights[: params.n], budget)
    for k in np.flatnonzero(moments % params.m == params.r):
        yield _index_to_word(int(k), params.q, params.n)


@lru_cache(maxsize=256)
def codebook(params: CodeParams, budget: int | None = None) -> tuple[Word, ...]:
    """Materialised, cached :func:`enumerate_codebook`."""
    return tuple(enumerate_codebook(params, budget))


def size(params: CodeParams, budget: int | None = None) -> int:
    moments = all_moments(params.q, params.weights[: params.n], budget)
    return int(np.count_nonzero(moments % params.m == params.r))


@dataclass
class SizeSearchResult:
    n: int
    q: int
    d: int
    max_size: int
    argmax_residues: list[int]
    per_residue_sizes: dict[int, int] | None = field(default=None, repr=False)

    def to_dict(self) -> dict:
        out = asdict(self)
        if self.per_residue_sizes is None:
            del out["per_residue_sizes"]
        else:
            out["per_residue_sizes"] = {str(k): v for k, v in self.per_residue_sizes.items()}
        return out


def max_size_search(q: int, d: int, n: int, histogram: bool = False,
                    budget: int | None = None) -> SizeSearchResult:
    """Largest codebook size over all residues with ``m = w_{n+1}``.

    One pass over the ``q**n`` words buckets moments by residue, so the cost
    does not depend on ``m``. Residues with no members are left out of the
    histogram.
    """
    params = make_params(q, d, n)
    moments = all_moments(q, params.weights[:n], budget)
    residues, counts = np.unique(moments % params.m, return_counts=True)
    best = int(counts.max())
    argmax = sorted(int(r) for r in residues[counts == best])
    hist = None
    if histogram:
        hist = {int(r): int(c) for r, c in zip(residues, counts)}
    return SizeSearchResult(n=n, q=q, d=d, max_size=best, argmax_residues=argmax,
                            per_residue_sizes=hist)


def results_to_json(results: Sequence[SizeSearchResult]) -> str:
    return json.dumps([r.to_dict() for r in results], indent=2)


def results_to_csv(results: Sequence[SizeSearchResult]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "N_n", "R_n"])
    for res in results:
        writer.writerow([res.n, res.max_size, ";".join(map(str, res.argmax_residues))])
    return buf.getvalue()
