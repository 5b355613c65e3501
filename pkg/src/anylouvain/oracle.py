"""Exact brute force for small graphs: enumerate every partition, find
the true optimum of a criterion, and re-evaluate single moves from
scratch.  Everything here goes through the pairwise evaluation path, so
it stays independent of the incremental bookkeeping it is used to check.
"""

from __future__ import annotations

import numpy as np

from .criteria import as_criterion
from .errors import TooLarge
from .graph import SENTINEL

#: Bell numbers B(0)..B(10): number of set partitions of n elements.
BELL_NUMBERS = (1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975)

DEFAULT_CAP = 10


def enumerate_partitions(n, cap=DEFAULT_CAP):
    """Yield every set partition of ``n`` nodes exactly once.

    Partitions come out as restricted-growth label arrays: node 0 always
    gets community 0 and each new community id is one past the largest id
    seen so far, which makes the labeling canonical.  There are Bell(n)
    of them, so ``n`` is capped (default 10).
    """
    if n > cap:
        raise TooLarge(f"partition enumeration capped at n={cap}, got {n}")
    if n == 0:
        yield np.zeros(0, dtype=np.int64)
        return
    a = np.zeros(n, dtype=np.int64)   # growth string
    b = np.zeros(n, dtype=np.int64)   # b[k] = 1 + max(a[:k]); b[0] stays 0
    b[1:] = 1
    while True:
        yield a.copy()
        j = n - 1
        while j > 0 and a[j] == b[j]:
            j -= 1
        if j == 0:
            return
        a[j] += 1
        top = max(b[j], a[j] + 1)
        a[j + 1:] = 0
        b[j + 1:] = top


def exact_optimum(criterion, g0, *, alpha=None, cap=DEFAULT_CAP):
    """Best partition of ``g0`` by exhaustive enumeration.

    Returns ``(labels, quality)``; ties go to the first partition in
    enumeration order.  ``g0`` must be level 0 and pretreated if the
    criterion needs it.
    """
    crit = as_criterion(criterion, alpha)
    if g0.n > cap:
        raise TooLarge(
            f"exact optimum capped at n={cap}, got {g0.n} nodes")
    best_labels = None
    best_q = -np.inf
    for labels in enumerate_partitions(g0.n, cap=cap):
        q = crit.relational(g0, labels)
        if q > best_q:
            best_q = q
            best_labels = labels
    return best_labels, float(best_q)


def delta_oracle(criterion, g0, labels, i, c_new, *, alpha=None):
    """Quality change of moving node ``i`` to community ``c_new``,
    computed by full re-evaluation of both partitions."""
    crit = as_criterion(criterion, alpha)
    labels = np.asarray(labels, dtype=np.int64)
    if labels[i] == SENTINEL:
        raise ValueError("node must belong to a community before the move")
    after = labels.copy()
    after[i] = c_new
    return crit.relational(g0, after) - crit.relational(g0, labels)
