"""Exhaustive ground truth for small codebooks.

Nothing here shares logic with the scanning decoders: preimages are found
by inserting every possible symbol tuple at every position combination and
keeping the codewords, and code-level verification hashes every deleted
codeword of every member.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from itertools import combinations, product
from typing import Sequence

from .channel import delete_at
from .codebook import codebook, contains
from .codeword import Word, as_word
from .params import CodeParams


def brute_decode_deletions(params: CodeParams, xd: Sequence[int]) -> set[Word]:
    """Every codeword that yields ``xd`` after ``n - len(xd)`` deletions."""
    word = as_word(xd, params.q)
    c = params.n - len(word)
    if c < 0:
        return set()
    found = set()
    for slots in combinations(range(params.n), c):
        slot_set = set(slots)
        for fill in product(range(params.q), repeat=c):
            src, ins = iter(word), iter(fill)
            cand = tuple(next(ins) if i in slot_set else next(src) for i in range(params.n))
            if contains(params, cand):
                found.add(cand)
    return found


def lcs_length(a: Sequence[int], b: Sequence[int]) -> int:
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0]
        for j, y in enumerate(b):
            cur.append(prev[j] + 1 if x == y else max(prev[j + 1], cur[j]))
        prev = cur
    return prev[-1]


def indel_distance(a: Sequence[int], b: Sequence[int]) -> int:
    """Minimum number of insertions plus deletions turning ``a`` into ``b``."""
    return len(a) + len(b) - 2 * lcs_length(a, b)


def brute_decode_indels(params: CodeParams, y: Sequence[int], budget: int | None = None) -> set[Word]:
    """Codewords within ``d`` insertions and deletions of ``y``."""
    word = as_word(y, params.q)
    if abs(len(word) - params.n) > params.d:
        return set()
    return {x for x in codebook(params, budget) if indel_distance(x, word) <= params.d}


@dataclass
class VerificationReport:
    params: dict
    codebook_size: int = 0
    deleted_words_checked: int = 0
    checks: list[str] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        out = asdict(self)
        out["passed"] = self.passed
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def verify_code(params: CodeParams, budget: int | None = None, max_counterexamples: int = 100) -> VerificationReport:
    """Check that no two distinct codewords share a deleted codeword.

    For each deletion count ``1..d`` every deleted codeword of every member
    is hashed; a bucket reached from two different members is a
    counterexample ``(x, y, D, E)``.
    """
    members = codebook(params, budget)
    report = VerificationReport(params=params.summary(), codebook_size=len(members))
    for c in range(1, min(params.d, params.n) + 1):
        report.checks.append(f"distinct {c}-deletion balls")
        seen: dict[Word, tuple[Word, tuple[int, ...]]] = {}
        for x in members:
            for D in combinations(range(1, params.n + 1), c):
                sub = delete_at(x, D)
                report.deleted_words_checked += 1
                prev = seen.setdefault(sub, (x, D))
                if prev[0] != x and len(report.counterexamples) < max_counterexamples:
                    report.counterexamples.append(
                        {"x": list(prev[0]), "y": list(x), "D": list(prev[1]), "E": list(D)})
    return report
