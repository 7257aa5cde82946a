"""Generic monomial staircases for a weight.

For a weight u with both entries negative, the staircase whose cell has
maximal dimension consists of the n points of N^2 with the largest values
of <u, .>.  That defining property is the primary construction here; the
interleaved explicit sequence is an independent second route, and the
punctual case degenerates to a single strip.
"""

from __future__ import annotations

from fractions import Fraction

from .orders import check_negative_weight, check_positive_weight
from .staircases import StandardSet


def _value(u, point):
    return u[0] * point[0] + u[1] * point[1]


def _tie_region(n):
    """Points whose relative weight values can influence the top-n selection."""
    return [
        (i, j)
        for j in range(n + 1)
        for i in range(n + 1)
        if (i + 1) * (j + 1) <= n + 1
    ]


def _check_no_ties(u, n):
    seen = {}
    for point in _tie_region(n):
        value = _value(u, point)
        if value in seen:
            raise ValueError(
                f"weight ({u[0]}, {u[1]}) is not generic for n = {n}: "
                f"{seen[value]} and {point} tie"
            )
        seen[value] = point


def _staircase_from_cells(cells):
    rows = {}
    for i, j in cells:
        rows[j] = rows.get(j, 0) + 1
    parts = [rows.get(j, 0) for j in range(len(rows))]
    if 0 in parts:
        raise AssertionError(f"cell set is not downward closed: {sorted(cells)}")
    for j, p in enumerate(parts):
        row = {i for i, jj in cells if jj == j}
        if row != set(range(p)):
            raise AssertionError(f"row {j} is not an initial segment: {sorted(row)}")
    return StandardSet(parts)


def boundary_region(n):
    """Verification region for the defining inequality, (i+1)(j+1) <= 2n."""
    bound = max(2 * n, 1)
    return [
        (i, j)
        for j in range(bound)
        for i in range(bound)
        if (i + 1) * (j + 1) <= bound
    ]


def generic_staircase(u, n):
    """Top-n selection: the unique size-n staircase maximizing <u, .>.

    The result is verified to be downward closed and to satisfy the strict
    inequality <u, alpha - beta> < 0 against every boundary point alpha
    outside it.  A tie anywhere in the selection-relevant region aborts
    with the offending pair.
    """
    check_negative_weight(u)
    if n < 0:
        raise ValueError(f"size must be non-negative, got {n}")
    _check_no_ties(u, n)
    if n == 0:
        return StandardSet(())
    candidates = [(i, j) for i in range(n) for j in range(n)]
    candidates.sort(key=lambda p: (-_value(u, p), p))
    chosen = candidates[:n]
    result = _staircase_from_cells(chosen)
    worst = min(_value(u, p) for p in chosen)
    for alpha in boundary_region(n):
        if not result.contains(alpha) and _value(u, alpha) >= worst:
            raise AssertionError(
                f"defining inequality fails at {alpha} for weight {u}"
            )
    return result


def _explicit_sequence(m):
    """The interleaved enumeration of N^2 governed by the slope bracket m.

    Group g emits, for k = 0..m-1, the points (g, k), (g-1, m+k), ...,
    (0, g*m+k); every point of N^2 appears exactly once.
    """
    g = 0
    while True:
        for k in range(m):
            for r in range(g + 1):
                yield (g - r, r * m + k)
        g += 1


def generic_staircase_explicit(u, n):
    """Second route: first n members of the explicit interleaved sequence.

    The slope bracket m is the integer with m - 1 < u1/u2 < m when
    u1 < u2 (both negative); an integral ratio is rejected as non-generic.
    The u1 > u2 case is the transpose of the swapped-weight case.
    """
    check_negative_weight(u)
    if n < 0:
        raise ValueError(f"size must be non-negative, got {n}")
    u1, u2 = u
    if u1 > u2:
        return generic_staircase_explicit((u2, u1), n).transpose()
    ratio = Fraction(u1, u2)  # positive: both entries negative
    if ratio.denominator == 1:
        raise ValueError(
            f"weight ({u1}, {u2}) has integral slope {ratio}; not generic"
        )
    m = int(ratio) + 1
    cells = []
    for point in _explicit_sequence(m):
        if len(cells) == n:
            break
        cells.append(point)
    return _staircase_from_cells(cells)


def generic_punctual(v, n):
    """Generic staircase in the punctual case: a single strip.

    Vertical (all rows of length one) when v1 < v2, horizontal when
    v1 > v2; v1 = v2 is not generic.
    """
    check_positive_weight(v)
    if n < 0:
        raise ValueError(f"size must be non-negative, got {n}")
    v1, v2 = v
    if v1 == v2:
        raise ValueError(f"weight ({v1}, {v2}) is not generic: equal entries")
    if n == 0:
        return StandardSet(())
    return StandardSet([1] * n) if v1 < v2 else StandardSet([n])
