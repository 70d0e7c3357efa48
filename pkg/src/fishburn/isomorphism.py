"""Brute-force poset isomorphism, canonical forms and induced subposets.

Everything here works on labelled relations only and never looks at levels,
matrices or ascent sequences, so it can serve as ground truth for the
bijections.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Sequence

from .core import Poset, SizeCapExceeded

DEFAULT_CAP = 8

# small forbidden posets; relations are (a, b) meaning a < b
TWO_PLUS_TWO = Poset(4, [(0, 1), (2, 3)])
THREE_PLUS_ONE = Poset(4, [(0, 1), (1, 2)])
N_POSET = Poset(4, [(0, 3), (1, 3), (1, 2)])  # e<h, f<h, f<g


def _invariant(P: Poset, x: int) -> tuple[int, int]:
    return bin(P.down[x]).count("1"), bin(P.up[x]).count("1")


def poset_isomorphic(P: Poset, Q: Poset, cap: int = DEFAULT_CAP) -> bool:
    """Search for a relation-preserving bijection P -> Q.

    Candidates are pruned by (downset size, upset size); the search itself
    is an exhaustive backtrack over the remaining choices.
    """
    if P.n != Q.n:
        return False
    n = P.n
    if n > cap:
        raise SizeCapExceeded(f"isomorphism search capped at n={cap}, got {n}")
    inv_p = [_invariant(P, x) for x in range(n)]
    inv_q = [_invariant(Q, y) for y in range(n)]
    if sorted(inv_p) != sorted(inv_q):
        return False
    order = sorted(range(n), key=lambda x: inv_p[x])
    image = [-1] * n
    used = [False] * n

    def extend(t: int) -> bool:
        if t == n:
            return True
        x = order[t]
        for y in range(n):
            if used[y] or inv_q[y] != inv_p[x]:
                continue
            ok = True
            for s in range(t):
                x2 = order[s]
                y2 = image[x2]
                if P.less(x, x2) != Q.less(y, y2) or P.less(x2, x) != Q.less(y2, y):
                    ok = False
                    break
            if not ok:
                continue
            image[x], used[y] = y, True
            if extend(t + 1):
                return True
            image[x], used[y] = -1, False
        return False

    return extend(0)


def _distinct_orders(items: Sequence[int], classes: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Orderings of ``items`` up to swapping items with equal class id."""
    pools: dict[int, list[int]] = {}
    for x, c in zip(items, classes):
        pools.setdefault(c, []).append(x)
    keys = sorted(pools)
    counts = {c: len(pools[c]) for c in keys}
    total = len(items)
    seq: list[int] = []

    def rec() -> Iterator[tuple[int, ...]]:
        if len(seq) == total:
            taken = {c: 0 for c in keys}
            out = []
            for c in seq:
                out.append(pools[c][taken[c]])
                taken[c] += 1
            yield tuple(out)
            return
        for c in keys:
            if counts[c]:
                counts[c] -= 1
                seq.append(c)
                yield from rec()
                seq.pop()
                counts[c] += 1

    yield from rec()


@dataclass(frozen=True)
class CanonicalPoset:
    """Relabeling-minimal relation matrix plus, for interval orders, the
    Fishburn matrix as a secondary key."""

    n: int
    relation: tuple[tuple[int, ...], ...]
    matrix_key: tuple[tuple[int, ...], ...] | None = None


def canonical_relation(P: Poset, cap: int = DEFAULT_CAP) -> tuple[tuple[int, ...], ...]:
    """Lexicographically minimal 0/1 relation matrix over the relabelings
    that list elements by increasing (downset size, upset size).

    Isomorphisms preserve that invariant, so the set of admissible
    relabelings is the same for isomorphic posets; elements with identical
    downsets and upsets are interchangeable and are not permuted among
    themselves.
    """
    n = P.n
    if n > cap:
        raise SizeCapExceeded(f"canonical form capped at n={cap}, got {n}")
    inv = {x: _invariant(P, x) for x in range(n)}
    cells: dict[tuple[int, int], list[int]] = {}
    for x in range(n):
        cells.setdefault(inv[x], []).append(x)
    twin_id: dict[tuple[int, int], int] = {}
    per_cell = []
    for key in sorted(cells):
        members = cells[key]
        classes = [twin_id.setdefault((P.down[x], P.up[x]), len(twin_id)) for x in members]
        per_cell.append(list(_distinct_orders(members, classes)))
    best = None
    for parts in product(*per_cell):
        order = [x for part in parts for x in part]
        mat = tuple(tuple(int(P.less(a, b)) for b in order) for a in order)
        if best is None or mat < best:
            best = mat
    return best if best is not None else ()


def canonical_form(P: Poset, cap: int = DEFAULT_CAP) -> CanonicalPoset:
    key = None
    if P.is_two_plus_two_free():
        from .bijections import poset_to_matrix
        from .core import IntervalOrderPoset

        key = tuple(poset_to_matrix(IntervalOrderPoset.from_downsets(P.down)))
    return CanonicalPoset(P.n, canonical_relation(P, cap), key)


def contains_induced(P: Poset, pattern: Poset) -> bool:
    """True iff some subset of P induces a poset isomorphic to ``pattern``."""
    k = pattern.n
    if k > P.n:
        return False
    for subset in combinations(range(P.n), k):
        if poset_isomorphic(P.induced(subset), pattern):
            return True
    return False
