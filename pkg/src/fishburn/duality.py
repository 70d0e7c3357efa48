"""Poset duality and its images on matrices, restricted ascent sequences and
restricted permutations; views and panoramas of integer sequences."""
from __future__ import annotations

from typing import Sequence

from .bijections import asc_to_matrix
from .core import (
    AscentSequence,
    FishburnMatrix,
    IntervalOrderPoset,
    NotRAsc,
    NotRPerm,
    PatternPermutation,
)
from .families import is_rasc, is_rperm


def poset_dual(P: IntervalOrderPoset) -> IntervalOrderPoset:
    """Reverse every relation."""
    return P.dual()


def matrix_flip(M: Sequence[Sequence[int]]) -> FishburnMatrix:
    """Reflect through the antidiagonal: out[i][j] = M[d-1-j][d-1-i]."""
    M = FishburnMatrix(M)
    d = M.dim
    return FishburnMatrix(tuple(M[d - 1 - j][d - 1 - i] for j in range(d)) for i in range(d))


def asc_dual(a: Sequence[int]) -> AscentSequence:
    """Dual of a self-modified ascent sequence, read off its matrix row by
    row from the bottom.

    Row r (1-based, r = d..1) contributes ``d-r`` repeated ``m[r][r]``
    times, then ``d-r-1`` repeated ``m[r][r+1]`` times, down to ``0``
    repeated ``m[r][d]`` times.  General ascent sequences are refused since
    no closed form is known off the restricted family.
    """
    a = AscentSequence(a)
    if not is_rasc(a):
        raise NotRAsc(f"{tuple(a)} is not self-modified; its dual has no known closed form")
    M = asc_to_matrix(a)
    d = M.dim
    out: list[int] = []
    for r in range(d - 1, -1, -1):
        top = d - 1 - r
        for c in range(r, d):
            out.extend([top - (c - r)] * M[r][c])
    return AscentSequence(out)


def views(s: Sequence[float]) -> tuple[int, ...]:
    """v[i] = v[j] + 1 for the nearest j > i with s[j] > s[i], else 0."""
    n = len(s)
    v = [0] * n
    stack: list[int] = []  # indices with strictly decreasing values, nearest on top
    for i in range(n - 1, -1, -1):
        while stack and s[stack[-1]] <= s[i]:
            stack.pop()
        v[i] = v[stack[-1]] + 1 if stack else 0
        stack.append(i)
    return tuple(v)


def panorama(s: Sequence[float]) -> AscentSequence:
    """Views grouped by value, largest value first, positions left to right."""
    v = views(s)
    order = sorted(range(len(s)), key=lambda i: (-s[i], i))
    return AscentSequence(v[i] for i in order)


def reverse(perm: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(perm))


def complement(perm: Sequence[int]) -> tuple[int, ...]:
    n = len(perm)
    return tuple(n + 1 - x for x in perm)


def inverse(perm: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(perm)
    for i, x in enumerate(perm, start=1):
        out[x - 1] = i
    return tuple(out)


def perm_dual(perm: Sequence[int]) -> PatternPermutation:
    perm = PatternPermutation(perm)
    if not is_rperm(perm):
        raise NotRPerm(f"{tuple(perm)} does not avoid 3-1bar-5-2-4bar")
    return PatternPermutation(inverse(complement(reverse(perm))))
