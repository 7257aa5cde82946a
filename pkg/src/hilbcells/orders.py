"""Orders on staircases of a fixed size: dominance and the weight orders.

Each integer weight xi in Z^2 induces a comparison on staircases of equal
size through the moment <xi, D> = xi1*S1 + xi2*S2, with the convention that
a LARGER moment means a SMALLER element.  Three sign patterns occur:

* mu:    xi1 << xi2 < 0.  The limit comparison is exact lexicographic order
         on the key (S1, S2), implemented symbolically (no magnitudes).
* nu:    0 < nu1 << nu2, the dual of mu under transposition; symbolically
         the reverse lexicographic order on (S2, S1).
* lambda: lambda1 < 0 < lambda2 with concrete integer entries; the moment
         itself is compared.

Distinct staircases whose full comparison key agrees are reported as TIED,
never as mutually comparable, so every strict order here is a genuine
partial order.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

from .staircases import StandardSet, enumerate_staircases


class OrderResult(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    TIED = "tied"
    INCOMPARABLE = "incomparable"

    def flip(self):
        if self is OrderResult.LESS:
            return OrderResult.GREATER
        if self is OrderResult.GREATER:
            return OrderResult.LESS
        return self


def check_lambda_weight(lam):
    """Require lambda1 < 0 < lambda2."""
    l1, l2 = lam
    if not (l1 < 0 < l2):
        raise ValueError(f"lambda weight must satisfy l1 < 0 < l2, got ({l1}, {l2})")


def check_negative_weight(u):
    u1, u2 = u
    if not (u1 < 0 and u2 < 0):
        raise ValueError(f"weight must have both entries negative, got ({u1}, {u2})")


def check_positive_weight(v):
    v1, v2 = v
    if not (v1 > 0 and v2 > 0):
        raise ValueError(f"weight must have both entries positive, got ({v1}, {v2})")


def mu_key(delta):
    """Total-order key for the mu comparison; smaller key = smaller element."""
    return (delta.s1, delta.s2)


def nu_key(delta):
    """Total-order key for the nu comparison; smaller key = smaller element."""
    return (-delta.s2, -delta.s1)


def lambda_key(lam, delta):
    """Key for a concrete mixed-sign weight; larger moment = smaller element."""
    return -(lam[0] * delta.s1 + lam[1] * delta.s2)


def _compare_by_key(ka, kb, a, b):
    if ka < kb:
        return OrderResult.LESS
    if ka > kb:
        return OrderResult.GREATER
    return OrderResult.EQUAL if a == b else OrderResult.TIED


def mu_compare(a, b):
    _check_sizes(a, b)
    return _compare_by_key(mu_key(a), mu_key(b), a, b)


def nu_compare(a, b):
    _check_sizes(a, b)
    return _compare_by_key(nu_key(a), nu_key(b), a, b)


def lambda_compare(lam, a, b):
    check_lambda_weight(lam)
    _check_sizes(a, b)
    return _compare_by_key(lambda_key(lam, a), lambda_key(lam, b), a, b)


def xi_compare(kind, a, b, lam=None):
    """Dispatch on kind 'mu' | 'nu' | 'lambda' (the latter needs lam)."""
    if kind == "mu":
        return mu_compare(a, b)
    if kind == "nu":
        return nu_compare(a, b)
    if kind == "lambda":
        if lam is None:
            raise ValueError("kind 'lambda' requires a weight")
        return lambda_compare(lam, a, b)
    raise ValueError(f"unknown order kind {kind!r}")


def xi_key(kind, delta, lam=None):
    if kind == "mu":
        return mu_key(delta)
    if kind == "nu":
        return nu_key(delta)
    if kind == "lambda":
        if lam is None:
            raise ValueError("kind 'lambda' requires a weight")
        return lambda_key(lam, delta)
    raise ValueError(f"unknown order kind {kind!r}")


def _check_sizes(a, b):
    if a.size != b.size:
        raise ValueError(f"size mismatch: |{a}| = {a.size} vs |{b}| = {b.size}")


def _prefix_sums(parts, length):
    out = []
    total = 0
    for i in range(length):
        total += parts[i] if i < len(parts) else 0
        out.append(total)
    return out


def dominance_compare(a, b):
    """Dominance order via row prefix sums, cross-checked against columns.

    a is LESS than b when every sum of the largest i rows of a is at most
    the corresponding sum for b.  The equivalent condition on the leftmost
    j columns (with the inequality reversed) is evaluated as well and the
    two answers are required to agree.
    """
    _check_sizes(a, b)
    length = max(a.height, b.height)
    pa = _prefix_sums(a.parts, length)
    pb = _prefix_sums(b.parts, length)
    rows_leq = all(x <= y for x, y in zip(pa, pb))
    rows_geq = all(x >= y for x, y in zip(pa, pb))

    at, bt = a.transpose(), b.transpose()
    clength = max(at.height, bt.height)
    ca = _prefix_sums(at.parts, clength)
    cb = _prefix_sums(bt.parts, clength)
    cols_leq = all(x >= y for x, y in zip(ca, cb))
    cols_geq = all(x <= y for x, y in zip(ca, cb))
    if (rows_leq, rows_geq) != (cols_leq, cols_geq):
        raise AssertionError(
            f"row and column dominance conditions disagree on {a} vs {b}"
        )

    if rows_leq and rows_geq:
        return OrderResult.EQUAL
    if rows_leq:
        return OrderResult.LESS
    if rows_geq:
        return OrderResult.GREATER
    return OrderResult.INCOMPARABLE


def generic_region(n):
    """Points of N^2 lying in some staircase with 2n+1 cells."""
    bound = 2 * n + 1
    return [
        (i, j)
        for j in range(bound)
        for i in range(bound)
        if (i + 1) * (j + 1) <= bound
    ]


def is_generic_lambda(lam, n):
    """Whether <lam, .> separates all points of the size-n generic region.

    True iff <lam, alpha - beta> != 0 for all distinct alpha, beta with
    (alpha1+1)(alpha2+1) <= 2n+1.  This is a conservative desk check; the
    weight orders themselves are well defined for any mixed-sign lambda.
    """
    check_lambda_weight(lam)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    seen = {}
    for point in generic_region(n):
        value = lam[0] * point[0] + lam[1] * point[1]
        if value in seen:
            return False
        seen[value] = point
    return True


@dataclass(frozen=True)
class CoverSet:
    """Hasse edges (a, b) with a < b over a finite carrier."""

    carrier: tuple
    edges: tuple

    def to_json(self):
        return json.dumps([[str(a), str(b)] for a, b in self.edges])

    def to_dot(self, extras=()):
        """DOT digraph; extras are (a, b, order_name) edges with an attribute."""
        lines = ["digraph {"]
        for node in self.carrier:
            lines.append(f'  "{node}";')
        for a, b in self.edges:
            lines.append(f'  "{a}" -> "{b}";')
        for a, b, kind in extras:
            lines.append(f'  "{a}" -> "{b}" [order="{kind}"];')
        lines.append("}")
        return "\n".join(lines)


TRANSITIVITY_CHECK_BOUND = 200


def cover_relations(carrier, strict_less):
    """Hasse edges of a strict order given by a predicate.

    The predicate is required to be irreflexive, and transitive whenever the
    carrier has at most 200 elements (checked exhaustively; a violation is
    reported with a witnessing triple).
    """
    carrier = list(carrier)
    m = len(carrier)
    succ = [0] * m  # bitmask of strictly larger elements
    pred = [0] * m
    for i, a in enumerate(carrier):
        if strict_less(a, a):
            raise ValueError(f"strict order is not irreflexive at {a}")
        for j, b in enumerate(carrier):
            if i != j and strict_less(a, b):
                succ[i] |= 1 << j
                pred[j] |= 1 << i
    if m <= TRANSITIVITY_CHECK_BOUND:
        for i in range(m):
            rest = succ[i]
            while rest:
                j = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                missing = succ[j] & ~succ[i]
                if missing:
                    k = (missing & -missing).bit_length() - 1
                    raise ValueError(
                        "strict order is not transitive: "
                        f"{carrier[i]} < {carrier[j]} < {carrier[k]} "
                        f"but not {carrier[i]} < {carrier[k]}"
                    )
    edges = []
    for i in range(m):
        rest = succ[i]
        while rest:
            j = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if succ[i] & pred[j] == 0:
                edges.append((carrier[i], carrier[j]))
    edges.sort(key=lambda e: (str(e[0]), str(e[1])))
    return CoverSet(carrier=tuple(carrier), edges=tuple(edges))


MAX_REFINEMENT_SIZE = 12


def dominance_covers(m):
    """Hasse diagram of the dominance order on staircases of size m."""
    carrier = enumerate_staircases(m)
    return cover_relations(
        carrier, lambda a, b: dominance_compare(a, b) is OrderResult.LESS
    )


def xi_covers(m, kind, lam=None):
    """Hasse diagram of a weight order on staircases of size m."""
    carrier = enumerate_staircases(m)
    return cover_relations(
        carrier, lambda a, b: xi_compare(kind, a, b, lam) is OrderResult.LESS
    )


def refinement_extra_edges(m, kind, lam=None):
    """Covers of the weight order that are not covers of dominance.

    Only strict comparisons contribute; tied pairs yield no edges.
    """
    if m > MAX_REFINEMENT_SIZE:
        raise ValueError(f"size bound exceeded: {m} > {MAX_REFINEMENT_SIZE}")
    base = {(a.parts, b.parts) for a, b in dominance_covers(m).edges}
    refined = xi_covers(m, kind, lam)
    extra = tuple(e for e in refined.edges if (e[0].parts, e[1].parts) not in base)
    return CoverSet(carrier=refined.carrier, edges=extra)
