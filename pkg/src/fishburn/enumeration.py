"""Exhaustive generators and counts for the four families and their tiers."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Iterator

from .bijections import matrix_to_poset
from .core import (
    AscentSequence,
    FishburnMatrix,
    IntervalOrderPoset,
    PatternPermutation,
    Poset,
    SizeCapExceeded,
    _bits,
)
from .families import (
    is_casc,
    is_cperm,
    is_rasc,
    is_rmatrix,
    is_rperm,
    is_rposet,
    is_se_free,
    is_series_parallel,
)
from .patterns import perm_contains_bivincular_231


@dataclass
class Caps:
    """Desk-scale size limits; adjust per run rather than editing code."""

    sequences: int = 10
    matrices: int = 10
    perms: int = 10
    posets: int = 8


CAPS = Caps()

FAMILIES = ("Asc", "Matrices", "Posets", "Perms")
TIERS = ("classical", "R", "C")


def _check_cap(n: int, cap: int, what: str) -> None:
    if n < 0:
        raise ValueError(f"size must be non-negative, got {n}")
    if n > cap:
        raise SizeCapExceeded(f"{what} generation capped at n={cap}, got {n}")


# ---------------------------------------------------------------------------
# ascent sequences

def _extend(prefix: list[int], ascents: int, n: int) -> Iterator[AscentSequence]:
    if len(prefix) == n:
        yield tuple.__new__(AscentSequence, prefix)
        return
    last = prefix[-1]
    for v in range(ascents + 2):
        prefix.append(v)
        yield from _extend(prefix, ascents + (v > last), n)
        prefix.pop()


def gen_asc(n: int, prefix: tuple[int, ...] = (0,)) -> Iterator[AscentSequence]:
    """Ascent sequences of length n in lexicographic order.

    ``prefix`` restricts generation to the subtree below a valid prefix,
    which is how the work is split for parallel runs.
    """
    _check_cap(n, CAPS.sequences, "ascent sequence")
    if n == 0:
        yield AscentSequence(())
        return
    prefix = tuple(AscentSequence(prefix))
    if len(prefix) > n:
        return
    ascents = sum(1 for x, y in zip(prefix, prefix[1:]) if x < y)
    yield from _extend(list(prefix), ascents, n)


def _subtree(args: tuple[int, tuple[int, ...]]) -> list[AscentSequence]:
    n, prefix = args
    return list(gen_asc(n, prefix))


def gen_asc_parallel(n: int, split: int = 3, workers: int | None = None) -> list[AscentSequence]:
    """Same output as ``list(gen_asc(n))``, computed by forking on prefixes.

    Prefixes of length ``split`` are generated in lexicographic order and
    their subtrees concatenated in that order.
    """
    if n <= split:
        return list(gen_asc(n))
    prefixes = [tuple(p) for p in gen_asc(split)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunks = pool.map(_subtree, [(n, p) for p in prefixes])
        return [a for chunk in chunks for a in chunk]


def gen_rgf(n: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth functions of length n, lexicographic."""
    _check_cap(n, CAPS.sequences, "RGF")

    def rec(prefix: list[int], top: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(top + 2):
            prefix.append(v)
            yield from rec(prefix, max(top, v))
            prefix.pop()

    if n == 0:
        yield ()
        return
    yield from rec([0], 0)


# ---------------------------------------------------------------------------
# matrices

def _matrices_of_dim(n: int, d: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    cells = [(i, j) for j in range(d) for i in range(j + 1)]  # column-major
    m = [[0] * d for _ in range(d)]
    row_hit = [0] * d
    col_hit = [0] * d

    def rec(t: int, left: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if t == len(cells):
            if left == 0 and all(row_hit):
                yield tuple(tuple(r) for r in m)
            return
        i, j = cells[t]
        # the diagonal cell is the last chance to fill column j
        lo = 1 if i == j and not col_hit[j] else 0
        for v in range(lo, left + 1):
            m[i][j] = v
            if v:
                row_hit[i] += 1
                col_hit[j] += 1
            # one unit of weight fills at most one empty row and one empty column
            cols_needed = (d - j - 1) + (1 if i < j and not col_hit[j] else 0)
            rows_needed = row_hit.count(0)
            if left - v >= max(cols_needed, rows_needed):
                yield from rec(t + 1, left - v)
            if v:
                row_hit[i] -= 1
                col_hit[j] -= 1
        m[i][j] = 0

    yield from rec(0, n)


def gen_matrices(n: int) -> Iterator[FishburnMatrix]:
    """Fishburn matrices of weight n, ordered by dimension then row-major
    entries (lexicographic)."""
    _check_cap(n, CAPS.matrices, "matrix")
    if n == 0:
        yield FishburnMatrix(())
        return
    for d in range(1, n + 1):
        found = sorted(_matrices_of_dim(n, d))
        for rows in found:
            yield tuple.__new__(FishburnMatrix, rows)


# ---------------------------------------------------------------------------
# permutations

def gen_perms(n: int) -> Iterator[PatternPermutation]:
    """2|3-1bar avoiders of length n, lexicographic."""
    _check_cap(n, CAPS.perms, "permutation")
    for w in permutations(range(1, n + 1)):
        if not perm_contains_bivincular_231(w):
            yield tuple.__new__(PatternPermutation, w)


# ---------------------------------------------------------------------------
# posets

def gen_posets(n: int) -> list[IntervalOrderPoset]:
    """(2+2)-free posets on n elements up to isomorphism, one per class,
    ordered by their Fishburn matrix."""
    _check_cap(n, CAPS.posets, "poset")
    seen: dict[tuple, IntervalOrderPoset] = {}
    for M in gen_matrices(n):
        P = matrix_to_poset(M)
        seen.setdefault(P.unlabelled_key, P)
    return list(seen.values())


def gen_all_posets(n: int) -> Iterator[Poset]:
    """Every naturally labelled poset on n elements (labelled; each
    isomorphism class appears at least once).

    Element k is added with a strict downset that is an order ideal of the
    poset on 0..k-1, so a < b only if a < b as integers.
    """
    _check_cap(n, 7, "all-poset")

    def ideals(down: list[int], k: int) -> Iterator[int]:
        for mask in range(1 << k):
            if all(down[x] & mask == down[x] for x in _bits(mask)):
                yield mask

    def rec(down: list[int]) -> Iterator[Poset]:
        k = len(down)
        if k == n:
            yield Poset.from_downsets(down)
            return
        for mask in ideals(down, k):
            down.append(mask)
            yield from rec(down)
            down.pop()

    yield from rec([])


# ---------------------------------------------------------------------------
# counts

TIER_PREDICATES: dict[str, dict[str, Callable]] = {
    "Asc": {"R": is_rasc, "C": is_casc},
    "Matrices": {"R": is_rmatrix, "C": is_se_free},
    "Posets": {"R": is_rposet, "C": is_series_parallel},
    "Perms": {"R": is_rperm, "C": is_cperm},
}

GENERATORS: dict[str, Callable[[int], object]] = {
    "Asc": gen_asc,
    "Matrices": gen_matrices,
    "Posets": gen_posets,
    "Perms": gen_perms,
}


@dataclass
class CountTable:
    rows: list[tuple[int, str, str, int]] = field(default_factory=list)

    def get(self, n: int, family: str, tier: str) -> int | None:
        for row in self.rows:
            if row[:3] == (n, family, tier):
                return row[3]
        return None

    def consistent(self) -> bool:
        """Within each (n, tier) all families that were counted agree."""
        groups: dict[tuple[int, str], set[int]] = {}
        for n, _, tier, c in self.rows:
            groups.setdefault((n, tier), set()).add(c)
        return all(len(v) == 1 for v in groups.values())

    def to_text(self) -> str:
        header = ("n", "family", "tier", "count")
        body = [tuple(str(x) for x in r) for r in self.rows]
        widths = [max(len(r[k]) for r in [header, *body]) for k in range(4)]
        lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in [header, *body]]
        return "\n".join(lines)

    def to_csv(self) -> str:
        lines = ["n,family,tier,count"]
        lines += [",".join(str(x) for x in r) for r in self.rows]
        return "\n".join(lines)


def count_table(max_n: int, tiers: tuple[str, ...] = TIERS, families: tuple[str, ...] = FAMILIES) -> CountTable:
    """Counts for every family and tier, n = 1..max_n.

    Posets beyond ``CAPS.posets`` are skipped rather than raising.
    """
    table = CountTable()
    for n in range(1, max_n + 1):
        for family in families:
            if family == "Posets" and n > CAPS.posets:
                continue
            objs = list(GENERATORS[family](n))
            for tier in tiers:
                if tier == "classical":
                    c = len(objs)
                else:
                    pred = TIER_PREDICATES[family][tier]
                    c = sum(1 for x in objs if pred(x))
                table.rows.append((n, family, tier, c))
    return table
