"""Classification facts for the family that follow from the determinant.

Only the settled cases are decided: quasi-alternating membership is known for
words with m1 = 1 (and, through the mirror, m2 = 1). Everything else is
reported as ``unknown`` rather than guessed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .braid import TghwParams

__all__ = [
    "QaVerdict",
    "quasi_alternating",
    "p_colorable",
    "is_prime",
    "recognize_family",
    "FAMILY_PRIORITY",
]

Verdict = Literal["yes", "no", "unknown"]


@dataclass(frozen=True)
class QaVerdict:
    value: Verdict
    reason: str

    def as_dict(self) -> dict[str, str]:
        return {"value": self.value, "reason": self.reason}


def quasi_alternating(p: TghwParams) -> QaVerdict:
    twist_ok = p.l in (-1, 0, 1)
    if p.m1 == 1:
        rule = f"(1,-m,n,l) family: quasi-alternating iff l in {{-1,0,1}}; l={p.l}"
    elif p.m2 == 1:
        # Mirror of (q,-1,n,l) is conjugate to (1,-q,n,-l); the criterion is symmetric in l.
        rule = f"mirror of (1,-{p.m1},{p.n},{-p.l}): quasi-alternating iff l in {{-1,0,1}}; l={p.l}"
    else:
        return QaVerdict("unknown", "m1 > 1 and m2 > 1: not covered by the (1,-m,n,l) criterion")
    return QaVerdict("yes" if twist_ok else "no", rule)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def p_colorable(det: int, p: int) -> bool:
    """A link is p-colorable (p an odd prime) exactly when p divides its determinant."""
    if det < 0:
        raise ValueError("determinant must be nonnegative")
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    return det % p == 0


FAMILY_PRIORITY = ("weaving", "torus", "hybrid-weaving", "twisted-hybrid-weaving", "generic")


def recognize_family(p: TghwParams) -> str:
    matches = set()
    if p.m1 == p.m2 == 1 and p.l == 0:
        matches.add("weaving")
    if p.m2 == 1 and p.n == 1 and p.l == 0:
        matches.add("torus")
    if p.m1 == p.m2 and p.l == 0:
        matches.add("hybrid-weaving")
    if p.m1 == p.m2 and p.l != 0:
        matches.add("twisted-hybrid-weaving")
    for label in FAMILY_PRIORITY:
        if label in matches:
            return label
    return "generic"
