"""Shared oracles and weight samples for the test suite.

Everything here is computed independently of the library paths it checks:
partition counts come from the classic bounded-part recurrence, and the
genericity oracle re-derives the separating condition by brute force.
"""

from functools import lru_cache

# five generic mixed-sign weights (distinct primes larger than every
# coordinate occurring for sizes <= 12, so no integer relation can tie)
GENERIC_LAMBDAS = [(-29, 31), (-31, 29), (-37, 41), (-43, 47), (-53, 59)]

# twenty generic weights spanning both signs of l1 + l2
LAMBDA_SAMPLE_20 = [
    (-29, 31), (-31, 29), (-29, 37), (-37, 29), (-37, 41),
    (-41, 37), (-29, 43), (-43, 29), (-41, 43), (-43, 41),
    (-47, 53), (-53, 47), (-31, 53), (-53, 31), (-59, 61),
    (-61, 59), (-31, 41), (-41, 31), (-47, 61), (-61, 47),
]


@lru_cache(maxsize=None)
def partition_count(n, max_part=None):
    """Number of partitions of n with parts <= max_part, by recurrence."""
    if max_part is None:
        max_part = n
    if n == 0:
        return 1
    if n < 0 or max_part == 0:
        return 0
    return partition_count(n - max_part, max_part) + partition_count(n, max_part - 1)


def triple_count(n):
    """Convolution oracle: number of staircase triples of total size n."""
    return sum(
        partition_count(a) * partition_count(b) * partition_count(n - a - b)
        for a in range(n + 1)
        for b in range(n + 1 - a)
    )


def brute_force_generic(lam, n):
    """Independent oracle for the separating condition on the region."""
    bound = 2 * n + 1
    points = [
        (i, j)
        for i in range(bound)
        for j in range(bound)
        if (i + 1) * (j + 1) <= bound
    ]
    values = [lam[0] * i + lam[1] * j for i, j in points]
    return len(set(values)) == len(values)
