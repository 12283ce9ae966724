"""2x2 integer matrices as nested tuples ((a, b), (c, d))."""

from __future__ import annotations

IntMat = tuple[tuple[int, int], tuple[int, int]]

IDENTITY: IntMat = ((1, 0), (0, 1))


def mat_mul(x: IntMat, y: IntMat) -> IntMat:
    (a, b), (c, d) = x
    (e, f), (g, h) = y
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def mat_pow(x: IntMat, k: int) -> IntMat:
    """Binary powering; k must be nonnegative."""
    if k < 0:
        raise ValueError("negative exponent; invert the matrix first")
    result = IDENTITY
    while k:
        if k & 1:
            result = mat_mul(result, x)
        x = mat_mul(x, x)
        k >>= 1
    return result


def mat_scale(x: IntMat, s: int) -> IntMat:
    (a, b), (c, d) = x
    return ((s * a, s * b), (s * c, s * d))


def mat_det(x: IntMat) -> int:
    (a, b), (c, d) = x
    return a * d - b * c


def mat_trace(x: IntMat) -> int:
    return x[0][0] + x[1][1]


def det_minus_identity(x: IntMat) -> int:
    (a, b), (c, d) = x
    return (a - 1) * (d - 1) - b * c
