"""Pattern containment for integer sequences and permutations.

Sequence patterns are equality-typed: ``101`` asks for a subsequence whose
first and last entries are equal and larger than the middle one.  The
generic engines are plain subsequence scans; the three permutation patterns
that matter here (``231``, the bivincular ``2|3-1bar`` and the barred
``3 1bar 5 2 4bar``) also get dedicated checks.
"""
from __future__ import annotations

from itertools import combinations
from typing import Sequence


def normalize(pattern: Sequence[int]) -> tuple[int, ...]:
    """Replace values by their rank among the distinct values (0-based)."""
    ranks = {v: r for r, v in enumerate(sorted(set(pattern)))}
    return tuple(ranks[v] for v in pattern)


def parse_pattern(text: str) -> tuple[int, ...]:
    """``"0101"`` or ``"0,1,0,1"`` -> ``(0, 1, 0, 1)``."""
    text = text.strip()
    if "," in text:
        return tuple(int(t) for t in text.split(","))
    return tuple(int(c) for c in text)


def _order_isomorphic(values: Sequence[int], pattern: Sequence[int]) -> bool:
    k = len(pattern)
    for x in range(k):
        for y in range(x + 1, k):
            p, q = pattern[x], pattern[y]
            u, v = values[x], values[y]
            if (p < q) != (u < v) or (p == q) != (u == v):
                return False
    return True


def seq_contains(s: Sequence[int], pattern: Sequence[int]) -> bool:
    """True iff some subsequence of ``s`` is order-isomorphic to ``pattern``."""
    k = len(pattern)
    if k == 0:
        return True
    if k > len(s):
        return False
    for idx in combinations(range(len(s)), k):
        if _order_isomorphic([s[i] for i in idx], pattern):
            return True
    return False


def seq_avoids(s: Sequence[int], pattern: Sequence[int]) -> bool:
    return not seq_contains(s, pattern)


def is_rgf(s: Sequence[int]) -> bool:
    """Restricted growth function: each j > 0 is preceded by some j - 1."""
    seen: set[int] = set()
    for v in s:
        if v < 0 or (v > 0 and v - 1 not in seen):
            return False
        seen.add(v)
    return True


def perm_contains_classical(perm: Sequence[int], pattern: Sequence[int]) -> bool:
    """Classical containment; for permutations this is the sequence engine."""
    return seq_contains(perm, pattern)


def contains_231(perm: Sequence[int]) -> bool:
    """O(n^2) test for a classical 231: some b > a to the right of a, then c < a."""
    n = len(perm)
    # suffix_min[k] = min(perm[k:])
    suffix_min = [0] * (n + 1)
    suffix_min[n] = n + 1
    for k in range(n - 1, -1, -1):
        suffix_min[k] = min(perm[k], suffix_min[k + 1])
    for i in range(n):
        for j in range(i + 1, n):
            if perm[j] > perm[i] and suffix_min[j + 1] < perm[i]:
                return True
    return False


def perm_contains_bivincular_231(perm: Sequence[int]) -> bool:
    """Containment of 2|3-1bar.

    An occurrence is a 231 whose first two entries are adjacent and whose
    first and last entries are consecutive values.
    """
    where = {v: i for i, v in enumerate(perm)}
    for i in range(len(perm) - 1):
        if perm[i + 1] > perm[i]:
            k = where.get(perm[i] - 1)
            if k is not None and k > i + 1:
                return True
    return False


def perm_avoids_barred_31524(perm: Sequence[int]) -> bool:
    """Membership in S_n(3 1bar 5 2 4bar).

    Every 231 occurrence ``perm[i] perm[j] perm[k]`` must extend to an
    occurrence of 31524 with an entry at a position strictly between i and j
    (the ``1``) and an entry after k (the ``4``).
    """
    n = len(perm)
    for i in range(n):
        for j in range(i + 1, n):
            if perm[j] <= perm[i]:
                continue
            low_between = min(perm[i + 1:j], default=None)
            for k in range(j + 1, n):
                if perm[k] >= perm[i]:
                    continue
                # 231 occurrence at (i, j, k)
                if low_between is None or low_between >= perm[k]:
                    return False
                if not any(perm[i] < perm[m] < perm[j] for m in range(k + 1, n)):
                    return False
    return True
