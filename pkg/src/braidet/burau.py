"""Reduced Burau representation of B3 and the Alexander polynomial of closures.

For a 3-braid w with image M = burau(w), det(M - I) equals ±t^k (1 + t + t^2)
times the Alexander polynomial of the closure. ``alexander`` recovers the
quotient exactly and normalizes it; ``determinant_fast`` skips the symbolic
work and multiplies integer matrices at t = -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .braid import Letter
from .intmat import IDENTITY, IntMat, det_minus_identity, mat_mul, mat_pow
from .laurent import ONE, ZERO, LaurentPoly, NonExactDivision, div_exact, eval_int

__all__ = [
    "MatL",
    "AlexanderResult",
    "BurauInconsistency",
    "CYCLOTOMIC3",
    "generator_matrix",
    "burau",
    "char_det",
    "alexander",
    "normalize",
    "determinant_fast",
]

CYCLOTOMIC3 = LaurentPoly({0: 1, 1: 1, 2: 1})


class BurauInconsistency(ArithmeticError):
    """det(burau(w) - I) was not divisible by 1 + t + t^2; indicates a bug."""


@dataclass(frozen=True)
class MatL:
    """2x2 matrix over Z[t, t^-1], entries in row-major order."""

    a: LaurentPoly
    b: LaurentPoly
    c: LaurentPoly
    d: LaurentPoly

    @classmethod
    def identity(cls) -> "MatL":
        return cls(ONE, ZERO, ZERO, ONE)

    @classmethod
    def from_rows(cls, rows) -> "MatL":
        (a, b), (c, d) = rows
        return cls(*(x if isinstance(x, LaurentPoly) else LaurentPoly.constant(x) for x in (a, b, c, d)))

    def rows(self) -> tuple[tuple[LaurentPoly, LaurentPoly], tuple[LaurentPoly, LaurentPoly]]:
        return ((self.a, self.b), (self.c, self.d))

    def __matmul__(self, o: "MatL") -> "MatL":
        return MatL(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __sub__(self, o: "MatL") -> "MatL":
        return MatL(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def det(self) -> LaurentPoly:
        return self.a * self.d - self.b * self.c

    def evaluate(self, x: int) -> IntMat:
        """Entries evaluated at t = x (x = ±1 keeps everything integral)."""
        return ((eval_int(self.a, x), eval_int(self.b, x)), (eval_int(self.c, x), eval_int(self.d, x)))

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


_t = LaurentPoly.monomial(1, 1)
_tinv = LaurentPoly.monomial(1, -1)

_GENERATORS = {
    (1, 1): MatL(-_t, ONE, ZERO, ONE),
    (1, -1): MatL(-_tinv, _tinv, ZERO, ONE),
    (2, 1): MatL(ONE, ZERO, _t, -_t),
    (2, -1): MatL(ONE, ZERO, ONE, -_tinv),
}


@lru_cache(maxsize=1024)
def generator_matrix(gen: int, power: int) -> MatL:
    """Image of s_gen^power."""
    base = _GENERATORS[(gen, 1 if power > 0 else -1)]
    k = abs(power)
    result = MatL.identity()
    while k:
        if k & 1:
            result = result @ base
        base = base @ base
        k >>= 1
    return result


def burau(w: Iterable[Letter]) -> MatL:
    m = MatL.identity()
    for gen, power in w:
        m = m @ generator_matrix(gen, power)
    return m


def char_det(w: Iterable[Letter]) -> LaurentPoly:
    """det(burau(w) - I)."""
    return (burau(w) - MatL.identity()).det()


@dataclass(frozen=True)
class AlexanderResult:
    char_det: LaurentPoly
    alexander: LaurentPoly
    determinant: int


def normalize(p: LaurentPoly) -> LaurentPoly:
    """Shift to lowest exponent 0 and make the leading coefficient positive."""
    if p.is_zero():
        return p
    p = p.shift(-p.low)
    return -p if p.leading_coefficient < 0 else p


def alexander(w: Iterable[Letter]) -> AlexanderResult:
    cd = char_det(w)
    if cd.is_zero():
        return AlexanderResult(cd, ZERO, 0)
    try:
        quotient = div_exact(cd, CYCLOTOMIC3)
    except NonExactDivision as exc:
        raise BurauInconsistency(str(exc)) from None
    delta = normalize(quotient)
    return AlexanderResult(cd, delta, abs(eval_int(delta, -1)))


# Generator images at t = -1.
_AT_MINUS_ONE: dict[tuple[int, int], IntMat] = {
    (1, 1): ((1, 1), (0, 1)),
    (1, -1): ((1, -1), (0, 1)),
    (2, 1): ((1, 0), (-1, 1)),
    (2, -1): ((1, 0), (1, 1)),
}


def determinant_fast(w: Iterable[Letter]) -> int:
    """|det(M - I)| with M the integer Burau image at t = -1."""
    m = IDENTITY
    for gen, power in w:
        block = mat_pow(_AT_MINUS_ONE[(gen, 1 if power > 0 else -1)], abs(power))
        m = mat_mul(m, block)
    return abs(det_minus_identity(m))
