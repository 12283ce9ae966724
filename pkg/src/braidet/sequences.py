"""Lucas and m-Lucas numbers and the determinant identities they satisfy.

L_{m,n} is the power sum Phi^n + (-1/Phi)^n of the roots of x^2 - m x - 1,
computed through its integer recurrence. The Binet form is kept only as a
floating-point sanity check.
"""

from __future__ import annotations

import math

from .braid import TghwParams
from .closed_form import det_closed_form
from .report import Report

__all__ = [
    "lucas",
    "m_lucas",
    "m_lucas_binet",
    "check_identity_weaving",
    "check_identity_hybrid",
    "check_identity_torus",
    "check_identity_one_five",
]


def m_lucas(m: int, n: int) -> int:
    if m < 1:
        raise ValueError("m must be positive")
    if n < 0:
        raise ValueError("n must be nonnegative")
    prev, cur = 2, m
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, m * cur + prev
    return cur


def lucas(n: int) -> int:
    return m_lucas(1, n)


def m_lucas_binet(m: int, n: int) -> float:
    phi = (m + math.sqrt(m * m + 4)) / 2
    return phi**n + (-1 / phi) ** n


def check_identity_weaving(n_max: int) -> Report:
    """det W(3, n) = L_{2n} - 2."""
    rep = Report("weaving")
    for n in range(1, n_max + 1):
        rep.add((1, 1, n, 0), det_closed_form(TghwParams(1, 1, n, 0)), lucas(2 * n) - 2)
    return rep.sort()


def check_identity_hybrid(m_max: int, n_max: int) -> Report:
    """L_{m,2n} - 2 for l = 0 and L_{m,2n} + 2 for l = ±1, with m1 = m2 = m."""
    rep = Report("hybrid")
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            lm = m_lucas(m, 2 * n)
            rep.add((m, m, n, 0), det_closed_form(TghwParams(m, m, n, 0)), lm - 2)
            for l in (-1, 1):
                rep.add((m, m, n, l), det_closed_form(TghwParams(m, m, n, l)), lm + 2)
    return rep.sort()


def check_identity_torus(q_max: int) -> Report:
    """det T(2, q) = q, realized at (q, 1, 1, 0)."""
    rep = Report("torus")
    for q in range(1, q_max + 1):
        rep.add((q, 1, 1, 0), det_closed_form(TghwParams(q, 1, 1, 0)), q)
    return rep.sort()


def check_identity_one_five(n_max: int, l_range: tuple[int, int] = (-3, 3)) -> Report:
    """det at (1, 5, n, l) equals L_{4n} + (-1)^(l+1) * 2; ``l_range`` is inclusive."""
    lo, hi = l_range
    rep = Report("one-five")
    for n in range(1, n_max + 1):
        l4n = lucas(4 * n)
        for l in range(lo, hi + 1):
            expected = l4n + (2 if l % 2 else -2)
            rep.add((1, 5, n, l), det_closed_form(TghwParams(1, 5, n, l)), expected)
    return rep.sort()
