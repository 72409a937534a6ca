"""Shared combinatorial helpers for the test suite."""


def partitions_of(n, largest=None):
    """All partitions of n with parts at most largest, largest part first."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def all_partitions_up_to(n):
    """Every partition of every size from 0 to n."""
    for size in range(n + 1):
        yield from partitions_of(size)


def subdiagrams(m, n):
    """All partitions fitting inside an m-by-n box (at most n parts, each at most m)."""
    def rec(rows_left, cap):
        yield ()
        if rows_left == 0:
            return
        for first in range(1, cap + 1):
            for rest in rec(rows_left - 1, first):
                yield (first,) + rest
    seen = set()
    for p in rec(n, m):
        if p not in seen:
            seen.add(p)
            yield p
