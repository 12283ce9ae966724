"""Closed-form determinant of the twisted generalized hybrid weaving family.

At t = -1 the braid (s1^m1 s2^-m2)^n (s1 s2)^(3l) maps to (-1)^l C^n with

    C = [[1 + m1*m2, m1], [m2, 1]],

whose characteristic polynomial is x^2 - (2 + m1*m2) x + 1. Expanding
det((-1)^l C^n - I) gives |tr(C^n) + (-1)^(l+1) * 2|, and tr(C^n) is the
power sum of the two eigenvalues. The power sum obeys an integer linear
recurrence, so no square roots ever appear.
"""

from __future__ import annotations

from .braid import TghwParams
from .intmat import IntMat, det_minus_identity, mat_det, mat_pow, mat_scale, mat_trace

__all__ = ["trace_power", "trace_sequence", "det_closed_form", "matrix_oracle", "oracle_matrix", "oracle_trace"]


def trace_sequence(m1m2: int, n: int) -> list[int]:
    """[a_0, ..., a_n] with a_0 = 2, a_1 = 2 + m1m2, a_k = (2 + m1m2) a_{k-1} - a_{k-2}."""
    if m1m2 < 1:
        raise ValueError("m1m2 must be positive")
    if n < 0:
        raise ValueError("n must be nonnegative")
    s = 2 + m1m2
    seq = [2, s]
    for _ in range(n - 1):
        seq.append(s * seq[-1] - seq[-2])
    return seq[: n + 1]


def trace_power(m1m2: int, n: int) -> int:
    if m1m2 < 1:
        raise ValueError("m1m2 must be positive")
    if n < 0:
        raise ValueError("n must be nonnegative")
    s = 2 + m1m2
    prev, cur = 2, s
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, s * cur - prev
    return cur


def det_closed_form(p: TghwParams) -> int:
    sign = 1 if p.l % 2 else -1
    return abs(trace_power(p.m1 * p.m2, p.n) + 2 * sign)


def oracle_matrix(p: TghwParams) -> IntMat:
    """(-1)^l C^n over the integers."""
    c = ((1 + p.m1 * p.m2, p.m1), (p.m2, 1))
    cn = mat_pow(c, p.n)
    if mat_det(cn) != 1:
        raise ArithmeticError(f"det(C^n) = {mat_det(cn)} != 1 for {p}")
    return mat_scale(cn, -1 if p.l % 2 else 1)


def matrix_oracle(p: TghwParams) -> int:
    return abs(det_minus_identity(oracle_matrix(p)))


def oracle_trace(p: TghwParams) -> int:
    """tr(C^n), read off the oracle's intermediate matrix."""
    m = oracle_matrix(p)
    return mat_trace(m) * (-1 if p.l % 2 else 1)
