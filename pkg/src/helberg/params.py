"""Code parameters and the weight sequence that defines the codes.

The weights obey ``w_i = 1 + (q-1) * (w_{i-1} + ... + w_{i-d})`` with
``w_i = 0`` for ``i <= 0``. All arithmetic uses Python integers, so lengths
well past where 64/128-bit words overflow are fine.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import InvalidParametersError


@lru_cache(maxsize=None)
def _weights_prefix(q: int, d: int, count: int) -> tuple[int, ...]:
    p = q - 1
    w = [0] * (count + 1)  # w[0] is the zero padding for i <= 0
    for i in range(1, count + 1):
        w[i] = 1 + p * sum(w[max(i - d, 0):i])
    return tuple(w[1:])


def weight_sequence(q: int, d: int, count: int) -> list[int]:
    """Return ``[w_1, ..., w_count]`` for alphabet size ``q`` and deletion budget ``d``."""
    _check_qd(q, d)
    if count < 0:
        raise InvalidParametersError(f"count must be non-negative, got {count}")
    return list(_weights_prefix(q, d, count))


def _check_qd(q: int, d: int) -> None:
    if q < 2:
        raise InvalidParametersError(f"alphabet size q must be >= 2, got {q}")
    if d < 1:
        raise InvalidParametersError(f"deletion budget d must be >= 1, got {d}")


@dataclass(frozen=True)
class CodeParams:
    """Parameters of the codebook ``C_n(q, d, m, r)``.

    Use :func:`make_params` rather than the constructor; it fills in the
    default modulus and validates everything.
    """

    q: int
    d: int
    n: int
    m: int
    r: int
    weights: tuple[int, ...] = field(repr=False, compare=False)

    @property
    def p(self) -> int:
        return self.q - 1

    def w(self, i: int) -> int:
        if i <= 0:
            return 0
        if i <= len(self.weights):
            return self.weights[i - 1]
        return _weights_prefix(self.q, self.d, i)[i - 1]

    def summary(self) -> dict:
        return {"q": self.q, "d": self.d, "n": self.n, "m": self.m, "r": self.r}


def make_params(q: int, d: int, n: int, r: int = 0, m: int | None = None) -> CodeParams:
    """Validate ``(q, d, n, r, m)`` and precompute ``w_1 .. w_{n+1}``.

    ``m`` defaults to ``w_{n+1}``, the smallest modulus allowed.
    """
    _check_qd(q, d)
    if n < 1:
        raise InvalidParametersError(f"length n must be >= 1, got {n}")
    weights = _weights_prefix(q, d, n + 1)
    w_next = weights[n]
    if m is None:
        m = w_next
    if m < w_next:
        raise InvalidParametersError(f"modulus m={m} is below w_{n + 1}={w_next}")
    if not 0 <= r < m:
        raise InvalidParametersError(f"residue r={r} must satisfy 0 <= r < m={m}")
    return CodeParams(q=q, d=d, n=n, m=m, r=r, weights=weights)


def weight(params: CodeParams, i: int) -> int:
    return params.w(i)


def _require_d2(params: CodeParams) -> None:
    if params.d < 2:
        raise InvalidParametersError("closed-form weight identities need d >= 2")


def weight_sum_closed_form(params: CodeParams, n: int) -> int:
    """Closed form of ``w_1 + ... + w_n`` for ``d >= 2``.

    Computes ``(p * sum_{i=0}^{d-1} (d-i) w_{n-i} - n) / (p*d - 1)`` and
    raises ``ArithmeticError`` if the division is not exact.
    """
    _require_d2(params)
    if n < 1:
        raise InvalidParametersError(f"n must be >= 1, got {n}")
    p, d = params.p, params.d
    numerator = p * sum((d - i) * params.w(n - i) for i in range(d)) - n
    quotient, remainder = divmod(numerator, p * d - 1)
    if remainder:
        raise ArithmeticError(f"closed form not integral at n={n}")
    return quotient


def verify_weight_sum_bound(params: CodeParams, n: int) -> bool:
    """Check ``(p*d - 1) * (w_1 + ... + w_n) < d * w_{n+1}`` exactly."""
    _require_d2(params)
    if n < 1:
        raise InvalidParametersError(f"n must be >= 1, got {n}")
    total = sum(params.w(i) for i in range(1, n + 1))
    return (params.p * params.d - 1) * total < params.d * params.w(n + 1)
