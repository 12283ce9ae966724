"""Verification suites: cross-route agreement and Burau representation properties."""

from __future__ import annotations

import random
from typing import Callable

from .braid import BraidWord, TghwParams, expand_tghw, exponent_sum, invert, render_word
from .burau import CYCLOTOMIC3, MatL, alexander, burau, char_det, determinant_fast
from .closed_form import det_closed_form, matrix_oracle
from .laurent import LaurentPoly, NonExactDivision, div_exact, unit_equivalent
from .report import Report
from .sequences import (
    check_identity_hybrid,
    check_identity_one_five,
    check_identity_torus,
    check_identity_weaving,
)

__all__ = [
    "route_determinants",
    "check_routes",
    "random_word",
    "check_burau_properties",
    "SUITES",
    "DEFAULT_BOUNDS",
    "run_suite",
]


def route_determinants(p: TghwParams) -> dict[str, int]:
    """Determinant of the family member by every available route."""
    w = expand_tghw(p)
    return {
        "closed": det_closed_form(p),
        "matrix": matrix_oracle(p),
        "fast": determinant_fast(w),
        "burau": alexander(w).determinant,
    }


def check_routes(m1_max: int = 6, m2_max: int = 6, n_max: int = 8, l_abs: int = 3) -> Report:
    rep = Report("routes")
    for m1 in range(1, m1_max + 1):
        for m2 in range(1, m2_max + 1):
            for n in range(1, n_max + 1):
                for l in range(-l_abs, l_abs + 1):
                    p = TghwParams(m1, m2, n, l)
                    dets = route_determinants(p)
                    others = [dets["matrix"], dets["fast"], dets["burau"]]
                    rep.add(p.astuple(), dets["closed"], others,
                            all(d == dets["closed"] for d in others))
    return rep.sort()


def random_word(rng: random.Random, max_length: int = 30, max_power: int = 3) -> BraidWord:
    length = rng.randint(0, max_length)
    letters = []
    for _ in range(length):
        power = rng.randint(1, max_power) * rng.choice((1, -1))
        letters.append((rng.choice((1, 2)), power))
    return BraidWord(letters)


_S1S2S1 = BraidWord([(1, 1), (2, 1), (1, 1)])
_S2S1S2 = BraidWord([(2, 1), (1, 1), (2, 1)])
_MINUS_T = LaurentPoly.monomial(-1, 1)


def check_burau_properties(count: int = 1000, max_length: int = 30, seed: int = 0) -> Report:
    """Property checks over ``count`` seeded random words of length <= ``max_length``."""
    rng = random.Random(seed)
    rep = Report("burau-props")
    identity = MatL.identity()
    for i in range(count):
        w = random_word(rng, max_length)
        tag = render_word(w)
        m = burau(w)

        cut = rng.randint(0, len(w))
        u, v = w[:cut], w[cut:]
        rep.add((i, "homomorphism", tag), m, burau(u) @ burau(v))

        rep.add((i, "braid-relation", tag), burau(u + _S1S2S1 + v), burau(u + _S2S1S2 + v))

        rep.add((i, "inverse", tag), burau(w + invert(w)), identity)

        rep.add((i, "det-law", tag), m.det(), _MINUS_T ** exponent_sum(w))

        cd = char_det(w)
        try:
            q = div_exact(cd, CYCLOTOMIC3)
            divisible = q * CYCLOTOMIC3 == cd
        except NonExactDivision:
            divisible = False
        rep.add((i, "divisibility", tag), str(cd), str(CYCLOTOMIC3), divisible)

        g = random_word(rng, max(1, max_length // 3))
        rep.add((i, "conjugation", tag), determinant_fast(g + w + invert(g)), determinant_fast(w))

        res = alexander(w)
        delta = res.alexander
        rep.add((i, "alexander-symmetry", tag), str(delta), str(delta.reverse()),
                unit_equivalent(delta, delta.reverse()))

        rep.add((i, "route-agreement", tag), res.determinant, determinant_fast(w))
    return rep.sort()


DEFAULT_BOUNDS: dict[str, dict[str, object]] = {
    "weaving": {"n_max": 30},
    "hybrid": {"m_max": 15, "n_max": 15},
    "torus": {"q_max": 50},
    "one-five": {"n_max": 20, "l_range": (-3, 3)},
    "routes": {"m1_max": 6, "m2_max": 6, "n_max": 8, "l_abs": 3},
    "burau-props": {"count": 1000, "max_length": 30, "seed": 0},
}

SUITES: dict[str, Callable[..., Report]] = {
    "weaving": check_identity_weaving,
    "hybrid": check_identity_hybrid,
    "torus": check_identity_torus,
    "one-five": check_identity_one_five,
    "routes": check_routes,
    "burau-props": check_burau_properties,
}


def run_suite(name: str, **bounds) -> Report:
    kwargs = dict(DEFAULT_BOUNDS[name])
    kwargs.update({k: v for k, v in bounds.items() if v is not None})
    return SUITES[name](**kwargs)
