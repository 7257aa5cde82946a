"""Triples of staircases indexing the cells of the Hilbert scheme of points.

A triple (d2, d1, d0) with |d2| + |d1| + |d0| = n labels one affine cell of
the n-point Hilbert scheme of the projective plane; its cohomological degree
is n + height(d2) - width(d0).  The involution iota realizes Poincare
duality on these labels.
"""

from __future__ import annotations

import enum
import json

from .orders import (
    OrderResult,
    check_lambda_weight,
    lambda_key,
    mu_compare,
    mu_key,
    nu_compare,
    nu_key,
)
from .staircases import StandardSet, enumerate_staircases

MAX_TRIPLE_SIZE = 12


class Triple:
    """Ordered triple of staircases (d2, d1, d0)."""

    __slots__ = ("d2", "d1", "d0", "total", "degree")

    def __init__(self, d2, d1, d0):
        self.d2 = d2
        self.d1 = d1
        self.d0 = d0
        self.total = d2.size + d1.size + d0.size
        self.degree = self.total + d2.height - d0.width

    def iota(self):
        """Duality involution: transpose each component and reverse the order."""
        return Triple(self.d0.transpose(), self.d1.transpose(), self.d2.transpose())

    def sizes(self):
        return (self.d2.size, self.d1.size, self.d0.size)

    def encode(self):
        """Text form 'd2|d1|d0' with staircase encodings."""
        return f"{self.d2.encode()}|{self.d1.encode()}|{self.d0.encode()}"

    @classmethod
    def parse(cls, text):
        pieces = text.strip().split("|")
        if len(pieces) != 3:
            raise ValueError(f"bad triple encoding {text!r}: expected 'd2|d1|d0'")
        return cls(*(StandardSet.parse(p) for p in pieces))

    def to_json_obj(self):
        return {
            "d2": list(self.d2.parts),
            "d1": list(self.d1.parts),
            "d0": list(self.d0.parts),
        }

    def to_json(self):
        return json.dumps(self.to_json_obj())

    def __eq__(self, other):
        return (
            isinstance(other, Triple)
            and self.d2 == other.d2
            and self.d1 == other.d1
            and self.d0 == other.d0
        )

    def __hash__(self):
        return hash((self.d2.parts, self.d1.parts, self.d0.parts))

    def __str__(self):
        return self.encode()

    def __repr__(self):
        return f"Triple.parse({self.encode()!r})"


def iota(t):
    return t.iota()


def degree(t):
    return t.degree


def enumerate_triples(n):
    """All triples with component sizes summing to n.

    Deterministic order: |d2| descending, then |d1| descending, then each
    component in staircase enumeration order.
    """
    if n < 0:
        raise ValueError(f"size must be non-negative, got {n}")
    if n > MAX_TRIPLE_SIZE:
        raise ValueError(f"size bound exceeded: {n} > {MAX_TRIPLE_SIZE}")
    pool = [enumerate_staircases(m) for m in range(n + 1)]
    out = []
    for n2 in range(n, -1, -1):
        for n1 in range(n - n2, -1, -1):
            n0 = n - n2 - n1
            for d2 in pool[n2]:
                for d1 in pool[n1]:
                    for d0 in pool[n0]:
                        out.append(Triple(d2, d1, d0))
    return out


def basis(n, k):
    """The degree-k triples of total size n."""
    if not 0 <= k <= 2 * n:
        raise ValueError(f"degree out of range: k = {k} not in [0, {2 * n}]")
    return [t for t in enumerate_triples(n) if t.degree == k]


def betti(n):
    """Cell counts per degree, b_0 .. b_{2n}."""
    counts = [0] * (2 * n + 1)
    for t in enumerate_triples(n):
        counts[t.degree] += 1
    return tuple(counts)


def _check_totals(t, u):
    if t.total != u.total:
        raise ValueError(f"total mismatch: {t.total} vs {u.total}")


def _size_bullet(t, u):
    """Comparison by outer component sizes alone, None when sizes all agree."""
    key_t = (t.d2.size, t.d0.size)
    key_u = (u.d2.size, u.d0.size)
    if key_t == key_u:
        return None
    if key_t[0] >= key_u[0] and key_t[1] <= key_u[1]:
        return OrderResult.LESS
    if key_t[0] <= key_u[0] and key_t[1] >= key_u[1]:
        return OrderResult.GREATER
    return OrderResult.INCOMPARABLE


def triple_compare(lam, t, u):
    """The weight order on triples for a concrete mixed-sign lambda.

    t < u when either |d2(t)| >= |d2(u)| and |d0(t)| <= |d0(u)| with the two
    size pairs distinct, or all component sizes agree and the slotwise
    comparisons (mu on d2, lambda on d1, nu on d0) are all <= with at least
    one strict.  Distinct triples whose three slot keys all tie are TIED.
    """
    check_lambda_weight(lam)
    _check_totals(t, u)
    if t == u:
        return OrderResult.EQUAL
    by_size = _size_bullet(t, u)
    if by_size is not None:
        return by_size
    slots = (
        mu_compare(t.d2, u.d2),
        _compare_values(lambda_key(lam, t.d1), lambda_key(lam, u.d1)),
        nu_compare(t.d0, u.d0),
    )
    if all(s in (OrderResult.EQUAL, OrderResult.TIED) for s in slots):
        return OrderResult.TIED
    if OrderResult.GREATER not in slots:
        return OrderResult.LESS
    if OrderResult.LESS not in slots:
        return OrderResult.GREATER
    return OrderResult.INCOMPARABLE


def _compare_values(x, y):
    if x < y:
        return OrderResult.LESS
    if x > y:
        return OrderResult.GREATER
    return OrderResult.EQUAL


class UniversalCmp(enum.Enum):
    """Outcome of quantifying the triple order over every admissible lambda."""

    LESS = "less"
    EQUAL = "equal"
    NOT_LEQ_FOR_SOME_LAMBDA = "not-leq-for-some-lambda"


def triple_leq_universal(t, u):
    """Decide 't < u for every mixed-sign lambda' in closed form.

    The size test is lambda-free.  In the equal-sizes case the middle slot
    asks that lam1*S1 + lam2*S2 of d1(t) be >= that of d1(u) for every
    lam1 < 0 < lam2, which holds iff S1(t.d1) <= S1(u.d1) and
    S2(t.d1) >= S2(u.d1).  Distinct triples whose keys tie in every slot
    never compare strictly and land in NOT_LEQ_FOR_SOME_LAMBDA, matching
    the strictness required of an off-diagonal pairing.
    """
    _check_totals(t, u)
    if t == u:
        return UniversalCmp.EQUAL
    by_size = _size_bullet(t, u)
    if by_size is OrderResult.LESS:
        return UniversalCmp.LESS
    if by_size is not None:
        return UniversalCmp.NOT_LEQ_FOR_SOME_LAMBDA
    slot2 = mu_compare(t.d2, u.d2)
    slot0 = nu_compare(t.d0, u.d0)
    if OrderResult.GREATER in (slot2, slot0):
        return UniversalCmp.NOT_LEQ_FOR_SOME_LAMBDA
    a = t.d1.s1 - u.d1.s1
    b = t.d1.s2 - u.d1.s2
    if a > 0 or b < 0:
        return UniversalCmp.NOT_LEQ_FOR_SOME_LAMBDA
    strict = (
        slot2 is OrderResult.LESS
        or slot0 is OrderResult.LESS
        or (a, b) != (0, 0)
    )
    return UniversalCmp.LESS if strict else UniversalCmp.NOT_LEQ_FOR_SOME_LAMBDA


def linear_extension_key(lam, t):
    """Sort key whose ascending order linearly extends the triple order.

    The size pair is compared first, then the three slot keys, and finally
    the text encoding as a deterministic tie-break.
    """
    return (
        -t.d2.size,
        t.d0.size,
        mu_key(t.d2),
        lambda_key(lam, t.d1),
        nu_key(t.d0),
        t.encode(),
    )
