"""Linear-time deletion decoders.

All decoders work on the same picture: the received word is laid out with
``c`` unknown placeholder symbols appended on the right, the rightmost
placeholder at position ``P`` (initially ``n``). The *index* ``I`` is the
moment still missing from the arrangement. Each step either shifts the known
symbol immediately left of the placeholders to their right (``P`` drops by
one and ``I`` drops by that symbol's weight gain) or fixes the rightmost
placeholder, after which the problem has one fewer unknown. Decoding ends
when the placeholders can be filled so that ``I`` becomes zero.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from .channel import is_subsequence
from .codebook import contains
from .codeword import Word, as_word, moment
from .errors import InvalidParametersError, UndecodableError
from .params import CodeParams


@dataclass(frozen=True)
class TraceStep:
    """One decoder step; ``I`` is the index after the step.

    ``kind`` is ``"start"`` (``k`` holds the number of unknowns),
    ``"shift"`` (``symbol`` moved from left of the placeholders to position
    ``P``) or ``"resolve"`` (placeholder ``k`` set to ``symbol`` at ``P``).
    """

    kind: str
    P: int
    I: int
    symbol: int | None = None
    k: int | None = None

    def __str__(self) -> str:
        if self.kind == "start":
            return f"start c={self.k} P={self.P} I={self.I}"
        if self.kind == "shift":
            return f"shift P={self.P} sym={self.symbol} I={self.I}"
        return f"resolve k={self.k} val={self.symbol} P={self.P} I={self.I}"

    @classmethod
    def parse(cls, line: str) -> "TraceStep":
        kind, *fields = line.split()
        kv = {key: int(val) for key, val in (f.split("=", 1) for f in fields)}
        if kind == "start":
            return cls("start", kv["P"], kv["I"], k=kv["c"])
        if kind == "shift":
            return cls("shift", kv["P"], kv["I"], symbol=kv["sym"])
        if kind == "resolve":
            return cls("resolve", kv["P"], kv["I"], symbol=kv["val"], k=kv["k"])
        raise ValueError(f"unknown trace step {line!r}")


class DecodeTrace(list):
    """Ordered list of :class:`TraceStep`, serialisable one step per line."""

    def to_text(self) -> str:
        return "\n".join(str(step) for step in self)

    @classmethod
    def from_text(cls, text: str) -> "DecodeTrace":
        return cls(TraceStep.parse(line) for line in text.splitlines() if line.strip())

    def indices(self) -> list[int]:
        """Distinct successive index values, e.g. ``[2498, 706, 378, 0]``."""
        out: list[int] = []
        for step in self:
            if not out or out[-1] != step.I:
                out.append(step.I)
        return out

    def replay(self, params: CodeParams, xd: Sequence[int]) -> Iterator[tuple[TraceStep, list, int]]:
        """Re-run the trace on ``xd``.

        Yields ``(step, arrangement, I)`` after every step, where unresolved
        placeholders appear as ``None`` and ``I`` is recomputed from the
        weights rather than copied from the step. The final arrangement is
        the decoded word.
        """
        head = list(xd)
        tail: deque[int] = deque()
        c = params.n - len(head)
        P = params.n
        I = None
        for step in self:
            if step.kind == "start":
                c, P, I = step.k, step.P, step.I
            elif step.kind == "shift":
                s = head.pop()
                if s != step.symbol or step.P != P:
                    raise ValueError(f"trace step {step} does not match the arrangement")
                I -= s * (params.w(P) - params.w(P - c))
                tail.appendleft(s)
                P -= 1
            else:
                if step.k != c or step.P != P:
                    raise ValueError(f"trace step {step} does not match the arrangement")
                I -= step.symbol * params.w(P)
                tail.appendleft(step.symbol)
                c -= 1
                P -= 1
            yield step, head + [None] * c + list(tail), I


class _Arrangement:
    """Mutable decoder state: known prefix, ``c`` placeholders ending at ``P``, fixed suffix."""

    def __init__(self, params: CodeParams, xd: Word, I: int, c: int):
        self.params = params
        self.head = list(xd)
        self.tail: deque[int] = deque()
        self.c = c
        self.P = params.n
        self.I = I
        self.trace = DecodeTrace([TraceStep("start", self.P, I, k=c)])
        self._check_index()

    def _check_index(self) -> None:
        if self.I < 0:
            raise UndecodableError(f"index became negative ({self.I}) at P={self.P}")

    @property
    def left(self) -> int:
        """Known symbol immediately left of the placeholders, ``x'_{P-c}``."""
        return self.head[-1]

    def shift(self) -> None:
        w = self.params.w
        s = self.head.pop()
        self.I -= s * (w(self.P) - w(self.P - self.c))
        self.tail.appendleft(s)
        self.trace.append(TraceStep("shift", self.P, self.I, symbol=s))
        self.P -= 1
        self._check_index()

    def resolve(self, value: int) -> None:
        self.I -= value * self.params.w(self.P)
        self.tail.appendleft(value)
        self.trace.append(TraceStep("resolve", self.P, self.I, symbol=value, k=self.c))
        self.c -= 1
        self.P -= 1
        self._check_index()

    def fit_placeholders(self) -> list[int] | None:
        """Symbols ``sigma_1..sigma_c`` with ``I = sum sigma_k w_{P-c+k}``, or ``None``.

        Each weight exceeds ``p`` times the sum of the ``d`` weights below
        it, so with ``c <= d`` the representation is unique when it exists
        and largest-weight-first greedy finds it.
        """
        p, w = self.params.p, self.params.w
        rem = self.I
        sigmas = [0] * self.c
        for k in range(self.c, 0, -1):
            wt = w(self.P - self.c + k)
            s = min(p, rem // wt)
            sigmas[k - 1] = s
            rem -= s * wt
        return sigmas if rem == 0 else None

    def try_finish(self) -> bool:
        sigmas = self.fit_placeholders()
        if sigmas is None:
            return False
        for s in reversed(sigmas):
            self.resolve(s)
        return True

    def word(self) -> Word:
        return tuple(self.head) + tuple(self.tail)

    def exhausted(self) -> bool:
        return self.P - self.c <= 0


def _scan_one(arr: _Arrangement) -> None:
    """Single unknown: shift left until ``I = sigma * w_P`` for some symbol."""
    while not arr.try_finish():
        if arr.exhausted():
            raise UndecodableError("single-deletion scan reached position 1 without a match")
        arr.shift()


def _scan_two_binary(arr: _Arrangement) -> None:
    w = arr.params.w
    while arr.c == 2:
        if arr.try_finish():
            return
        if arr.exhausted():
            raise UndecodableError("two-deletion scan reached the left end without a match")
        P, I, s = arr.P, arr.I, arr.left
        if w(P) > I:
            if s == 0 or I >= w(P) - w(P - 2):
                arr.shift()
            else:
                arr.resolve(0)
        elif s == 0:
            arr.resolve(1)
        else:
            arr.shift()
    _scan_one(arr)


def _sigma_max(p: int, gap: int, I: int) -> int:
    # largest sigma in 0..p with sigma * gap < I; I > 0 here
    return min(p, (I - 1) // gap) if gap > 0 else p


def _scan_multi(arr: _Arrangement) -> None:
    p, w = arr.params.p, arr.params.w
    while arr.c >= 2:
        if arr.try_finish():
            return
        if arr.exhausted():
            raise UndecodableError(
                f"{arr.c}-deletion scan reached the left end without a match")
        P, c, I, s = arr.P, arr.c, arr.I, arr.left
        gap = w(P) - w(P - c)
        if w(P) > I:
            if s == 0 or I >= gap:
                arr.shift()
            else:
                arr.resolve(0)
        else:
            smax = _sigma_max(p, gap, I)
            if s > smax:
                # s > smax only gives s * gap >= I; at equality the shift
                # itself zeroes the index, so resolving here would be wrong
                if s * gap == I:
                    arr.shift()
                else:
                    arr.resolve(smax)
            elif s < smax:
                if smax * w(P) <= I:
                    arr.resolve(smax)
                else:
                    arr.shift()
            else:
                arr.shift()
    if arr.c == 1:
        _scan_one(arr)


def _prepare(params: CodeParams, xd: Sequence[int], c_expected: int | None = None) -> tuple[Word, int]:
    if params.d < 2:
        raise InvalidParametersError(
            "these decoders need d >= 2; for d = 1 use Levenshtein's single-deletion decoder")
    word = as_word(xd, params.q)
    c = params.n - len(word)
    if c_expected is not None and c != c_expected:
        raise ValueError(f"expected a word of length {params.n - c_expected}, got {len(word)}")
    return word, c


def recover_moment(params: CodeParams, xd: Sequence[int]) -> int:
    """Moment of the transmitted codeword, from the received word alone.

    Every codeword moment is below ``2m``, so it is either ``r`` or
    ``r + m``; it is ``r + m`` exactly when the received moment exceeds ``r``.
    """
    word, c = _prepare(params, xd)
    if not 1 <= c <= params.d:
        raise ValueError(f"{c} deletions is outside 1..{params.d}")
    return params.r + params.m if moment(params, word) > params.r else params.r


def decode_one(params: CodeParams, xd: Sequence[int], I: int) -> tuple[Word, DecodeTrace]:
    word, _ = _prepare(params, xd, 1)
    arr = _Arrangement(params, word, I, 1)
    _scan_one(arr)
    return arr.word(), arr.trace


def decode_two_binary(params: CodeParams, xd: Sequence[int], I: int) -> tuple[Word, DecodeTrace]:
    """Two deletions from a binary code, using the binary case split directly."""
    if params.q != 2:
        raise InvalidParametersError(f"binary two-deletion decoder needs q = 2, got q = {params.q}")
    word, _ = _prepare(params, xd, 2)
    arr = _Arrangement(params, word, I, 2)
    _scan_two_binary(arr)
    return arr.word(), arr.trace


def decode_multi(params: CodeParams, xd: Sequence[int], I: int) -> tuple[Word, DecodeTrace]:
    word, c = _prepare(params, xd)
    if not 2 <= c <= params.d:
        raise UndecodableError(f"{c} deletions is outside 2..{params.d}")
    arr = _Arrangement(params, word, I, c)
    _scan_multi(arr)
    return arr.word(), arr.trace


_ALGORITHMS = {"d1": decode_one, "d2": decode_two_binary, "dm": decode_multi}


def decode(params: CodeParams, xd: Sequence[int], algorithm: str = "auto") -> tuple[Word, DecodeTrace]:
    """Recover the transmitted codeword from a word that suffered up to ``d`` deletions.

    ``algorithm`` may force ``"d1"``, ``"d2"`` or ``"dm"``; ``"auto"``
    picks the single-deletion scan for one deletion and the general scan
    otherwise. The result is checked to be a codeword containing ``xd`` as
    a subsequence; anything else raises :class:`UndecodableError`.
    """
    word, c = _prepare(params, xd)
    if c < 0:
        raise UndecodableError(f"received word is longer than n={params.n}; only deletions are decoded")
    if c == 0:
        if contains(params, word):
            return word, DecodeTrace([TraceStep("start", params.n, 0, k=0)])
        raise UndecodableError("received word has full length but is not a codeword")
    if c > params.d:
        raise UndecodableError(f"{c} deletions exceeds the code's capability d={params.d}")
    I = recover_moment(params, word) - moment(params, word)
    if algorithm == "auto":
        fn = decode_one if c == 1 else decode_multi
    else:
        try:
            fn = _ALGORITHMS[algorithm]
        except KeyError:
            raise ValueError(f"unknown algorithm {algorithm!r}") from None
    out, trace = fn(params, word, I)
    if not contains(params, out) or not is_subsequence(word, out):
        raise UndecodableError(f"decoder produced {out}, which is not a valid preimage")
    return out, trace
