"""Exact Laurent polynomials in Z[t, t^-1].

A polynomial is stored as a sorted tuple of ``(exponent, coefficient)`` pairs
with no zero coefficients, so structural equality is ring equality and values
are hashable. Coefficients are Python ints (arbitrary precision).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentPoly",
    "NonExactDivision",
    "ZERO",
    "ONE",
    "T",
    "add",
    "mul",
    "eval_int",
    "div_exact",
    "unit_equivalent",
    "parse_laurent",
]


class NonExactDivision(ArithmeticError):
    """Raised when a Laurent division leaves a nonzero remainder."""


def _canonical(terms: Mapping[int, int]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((e, c) for e, c in terms.items() if c != 0))


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[int, int], Iterable[tuple[int, int]], None] = None):
        if terms is None:
            terms = {}
        if not isinstance(terms, Mapping):
            acc: dict[int, int] = {}
            for e, c in terms:
                acc[e] = acc.get(e, 0) + c
            terms = acc
        self._terms = _canonical(terms)
        self._hash = None

    @classmethod
    def _from_canonical(cls, terms: tuple[tuple[int, int], ...]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, coeff: int, exp: int = 0) -> "LaurentPoly":
        return cls._from_canonical(((exp, coeff),) if coeff else ())

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls.monomial(c, 0)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], low: int = 0) -> "LaurentPoly":
        """Build from a dense coefficient list starting at exponent ``low``."""
        return cls({low + i: c for i, c in enumerate(coeffs)})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> tuple[tuple[int, int], ...]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def low(self) -> int:
        """Lowest exponent (valuation). Undefined for zero."""
        if not self._terms:
            raise ValueError("zero polynomial has no lowest exponent")
        return self._terms[0][0]

    @property
    def high(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no highest exponent")
        return self._terms[-1][0]

    @property
    def leading_coefficient(self) -> int:
        return self._terms[-1][1] if self._terms else 0

    def coeff(self, exp: int) -> int:
        for e, c in self._terms:
            if e == exp:
                return c
        return 0

    def dense(self) -> list[int]:
        """Coefficients from ``low`` to ``high`` inclusive."""
        if not self._terms:
            return []
        lo = self.low
        out = [0] * (self.high - lo + 1)
        for e, c in self._terms:
            out[e - lo] = c
        return out

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._from_canonical(tuple((e, -c) for e, c in self._terms))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self._terms) != 1 or abs(self._terms[0][1]) != 1:
                raise ValueError("only units ±t^k have inverses")
            e, c = self._terms[0]
            return LaurentPoly.monomial(c ** (-k), e * k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly._from_canonical(tuple((e + k, c) for e, c in self._terms))

    def reverse(self) -> "LaurentPoly":
        """Substitute t -> t^-1."""
        return LaurentPoly._from_canonical(tuple((-e, c) for e, c in reversed(self._terms)))

    def __call__(self, x):
        return eval_int(self, x)

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self._terms):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = "t" if e == 1 else f"t^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            if i == 0:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
T = LaurentPoly.monomial(1, 1)


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if not a._terms:
        return b
    if not b._terms:
        return a
    acc = dict(a._terms)
    for e, c in b._terms:
        acc[e] = acc.get(e, 0) + c
    return LaurentPoly._from_canonical(_canonical(acc))


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if not a._terms or not b._terms:
        return ZERO
    acc: dict[int, int] = {}
    for e1, c1 in a._terms:
        for e2, c2 in b._terms:
            k = e1 + e2
            acc[k] = acc.get(k, 0) + c1 * c2
    return LaurentPoly._from_canonical(_canonical(acc))


def eval_int(a: LaurentPoly, x: int) -> Union[int, Fraction]:
    """Evaluate ``a`` at the nonzero integer ``x``.

    Returns an int when the value is integral (always the case for x = ±1),
    otherwise a Fraction.
    """
    if x == 0:
        raise ZeroDivisionError("cannot evaluate a Laurent polynomial at t = 0")
    if x in (1, -1):
        return sum(c if (x == 1 or e % 2 == 0) else -c for e, c in a._terms)
    total = Fraction(0)
    for e, c in a._terms:
        total += c * Fraction(x) ** e
    return int(total) if total.denominator == 1 else total


def div_exact(a: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Return ``q`` with ``a == q * d``, or raise NonExactDivision.

    Both operands are shifted to ordinary polynomials with constant term at
    exponent 0 before long division; the shift difference is restored on the
    quotient.
    """
    if not d._terms:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a._terms:
        return ZERO
    shift = a.low - d.low
    num = a.dense()
    den = d.dense()
    lead = den[-1]
    if len(num) < len(den):
        raise NonExactDivision(f"({a}) is not divisible by ({d})")
    quot = [0] * (len(num) - len(den) + 1)
    for i in range(len(quot) - 1, -1, -1):
        top = num[i + len(den) - 1]
        if top % lead:
            raise NonExactDivision(f"({a}) is not divisible by ({d})")
        q = top // lead
        quot[i] = q
        if q:
            for j, dc in enumerate(den):
                num[i + j] -= q * dc
    if any(num):
        raise NonExactDivision(f"({a}) is not divisible by ({d})")
    return LaurentPoly.from_coeffs(quot, shift)


def unit_equivalent(a: LaurentPoly, b: LaurentPoly) -> bool:
    """True iff ``a == ±t^k * b`` for some integer k."""
    if not a._terms or not b._terms:
        return not a._terms and not b._terms
    if len(a._terms) != len(b._terms):
        return False
    k = a.low - b.low
    sign = 1 if a._terms[0][1] == b._terms[0][1] else -1
    return all(
        ea == eb + k and ca == sign * cb
        for (ea, ca), (eb, cb) in zip(a._terms, b._terms)
    )


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<coef>\d+)\s*(?:\*\s*(?P<var1>t)(?:\^(?P<exp1>-?\d+))?)?
          | (?P<var2>t)(?:\^(?P<exp2>-?\d+))?
        )\s*""",
    re.VERBOSE,
)


def parse_laurent(text: str) -> LaurentPoly:
    """Parse the textual form produced by ``str(LaurentPoly)``.

    Accepts sums such as ``t^-1 - 2 + t`` or ``-3*t^2 + 1``.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    acc: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (not first and m.group("sign") is None):
            raise ValueError(f"cannot parse Laurent polynomial at position {pos}: {text!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coef") is not None:
            coef = int(m.group("coef"))
            if m.group("var1"):
                exp = int(m.group("exp1")) if m.group("exp1") else 1
            else:
                exp = 0
        elif m.group("var2"):
            coef = 1
            exp = int(m.group("exp2")) if m.group("exp2") else 1
        else:
            raise ValueError(f"cannot parse Laurent polynomial at position {pos}: {text!r}")
        acc[exp] = acc.get(exp, 0) + sign * coef
        pos = m.end()
        first = False
    return LaurentPoly(acc)
