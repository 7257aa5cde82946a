"""Torus weights on the line bundle over the n-point Hilbert scheme.

A weight vector (w0, w1, w2) with zero sum and strictly increasing entries
induces a one-parameter torus action.  Embedding each of the three
staircase components of a triple into the degree-d simplex of N^3 gives an
integer weight for the line-bundle fiber at the corresponding fixed point;
for d much larger than n only the d-linear term survives comparisons, which
is what the class-vanishing criterion feeds on.
"""

from __future__ import annotations

from functools import lru_cache


class Weight3:
    """Integer weight vector with w0 + w1 + w2 = 0 and w0 < w1 < w2."""

    __slots__ = ("w0", "w1", "w2")

    def __init__(self, w0, w1, w2):
        total = w0 + w1 + w2
        if total != 0:
            raise ValueError(f"weight entries must sum to 0, got sum {total}")
        if not (w0 < w1 < w2):
            raise ValueError(
                f"weight entries must be strictly increasing, got ({w0}, {w1}, {w2})"
            )
        self.w0 = w0
        self.w1 = w1
        self.w2 = w2

    def dot(self, point):
        a0, a1, a2 = point
        return self.w0 * a0 + self.w1 * a1 + self.w2 * a2

    def entries(self):
        return (self.w0, self.w1, self.w2)

    @classmethod
    def parse(cls, text):
        pieces = text.strip().split(",")
        if len(pieces) != 3:
            raise ValueError(f"bad weight encoding {text!r}: expected 'w0,w1,w2'")
        return cls(*(int(p) for p in pieces))

    def __eq__(self, other):
        return isinstance(other, Weight3) and self.entries() == other.entries()

    def __hash__(self):
        return hash(self.entries())

    def __repr__(self):
        return f"Weight3{self.entries()}"


def validate_w(w, n):
    """Admissibility of w for the plane/line part of an n-point basis.

    Requires w0 - w2 < n*(w1 - w2) on top of the constructor invariants,
    plus the sign pattern w0 - w1 < 0 < w2 - w1.
    """
    return (
        w.w0 - w.w2 < n * (w.w1 - w.w2)
        and w.w0 - w.w1 < 0 < w.w2 - w.w1
    )


def validate_wprime(w, n):
    """Admissibility of w' for the line/point part of an n-point basis."""
    return (
        w.w0 - w.w1 < 0 < w.w2 - w.w1
        and 0 < w.w1 - w.w0 < n * (w.w2 - w.w0)
    )


def embed(j, d, alpha):
    """Degree-d embedding of a plane cell into N^3 for component j in {2,1,0}.

    The output always has coordinate sum d.
    """
    a1, a2 = alpha
    rest = d - a1 - a2
    if rest < 0:
        raise ValueError(f"degree overflow: |{alpha}| = {a1 + a2} > d = {d}")
    if j == 2:
        return (a1, a2, rest)
    if j == 1:
        return (a1, rest, a2)
    if j == 0:
        return (rest, a1, a2)
    raise ValueError(f"component index must be 0, 1 or 2, got {j}")


@lru_cache(maxsize=256)
def _simplex_sum(entries, d):
    """Sum of <w, alpha> over all alpha in N^3 with |alpha| < d, literally."""
    w0, w1, w2 = entries
    total = 0
    for e in range(d):
        for a0 in range(e + 1):
            for a1 in range(e + 1 - a0):
                a2 = e - a0 - a1
                total += w0 * a0 + w1 * a1 + w2 * a2
    return total


def phi(w, d, t):
    """Fiber weight of the degree-d line bundle at the fixed point of t.

    Computed as minus the simplex term minus the pulled-back weights of all
    three embedded components.  The simplex term is evaluated literally and
    must vanish because the simplex is permutation symmetric and the weight
    entries sum to zero.
    """
    if d < t.total:
        raise ValueError(f"embedding degree too small: d = {d} < n = {t.total}")
    simplex = _simplex_sum(w.entries(), d)
    if simplex != 0:
        raise AssertionError(f"simplex term must vanish, got {simplex}")
    total = -simplex
    for j, delta in ((2, t.d2), (1, t.d1), (0, t.d0)):
        for cell in delta.cells():
            total -= w.dot(embed(j, d, cell))
    return total


def size_gap_vector(t, u):
    """Component-size differences pairing t against the dual arrangement of u."""
    return (
        t.d0.size - u.d2.size,
        t.d1.size - u.d1.size,
        t.d2.size - u.d0.size,
    )


def asymptotic_sign(w, t, u):
    """Sign of the d-leading term of phi(w, d, iota(u)) - phi(w, d, t).

    For d much larger than the total size the full difference has this
    sign whenever it is non-zero.
    """
    if t.total != u.total:
        raise ValueError(f"total mismatch: {t.total} vs {u.total}")
    value = w.dot(size_gap_vector(t, u))
    return (value > 0) - (value < 0)
