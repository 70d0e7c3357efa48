"""Bijections between ascent sequences, Fishburn matrices, interval orders
and 2|3-1bar-avoiding permutations.

Every recursive map accepts an optional :class:`BijectionTrace` that is
filled with one :class:`TraceStep` per element processed.  Matrix-side case
labels are ``"M1"``/``"M2"``/``"M3"`` for the build direction and
``"R1"``/``"R2"``/``"R3"`` for reduction; poset-side labels are
``"P1"``/``"P2"``/``"P3"`` and ``"Q1"``/``"Q2"``/``"Q3"`` for removal.  The
first building step is labelled ``"init"``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from .core import (
    AscentSequence,
    FishburnMatrix,
    IntervalOrderPoset,
    NotInAvoidanceClass,
    NotRAsc,
    NotRMatrix,
    PatternPermutation,
    Poset,
    _bits,
    active_sites,
)


@dataclass(frozen=True)
class TraceStep:
    k: int
    case: str
    snapshot: Any


@dataclass
class BijectionTrace:
    steps: list[TraceStep] = field(default_factory=list)

    def add(self, k: int, case: str, snapshot: Any) -> None:
        self.steps.append(TraceStep(k, case, snapshot))

    @property
    def cases(self) -> list[str]:
        return [s.case for s in self.steps]

    def __len__(self) -> int:
        return len(self.steps)


# ---------------------------------------------------------------------------
# ascent sequences <-> matrices

def _freeze(rows: list[list[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(r) for r in rows)


def asc_to_matrix(a: Sequence[int], trace: BijectionTrace | None = None) -> FishburnMatrix:
    a = AscentSequence(a)
    if not a:
        return FishburnMatrix(())
    m = [[1]]
    if trace is not None:
        trace.add(1, "init", _freeze(m))
    for k in range(1, len(a)):
        v = a[k]
        d = len(m)
        mindex = next(i for i in range(d) if m[i][d - 1]) + 1
        if v < mindex:
            m[v][d - 1] += 1
            case = "M1"
        elif v == d:
            for row in m:
                row.append(0)
            m.append([0] * d + [1])
            case = "M2"
        else:
            # prise apart after row/column v; rows above the cut hand their
            # last-column entries to the new column
            new = [[0] * (d + 1) for _ in range(d + 1)]
            shift = lambda t: t if t < v else t + 1  # noqa: E731
            for i in range(d):
                for j in range(d):
                    new[shift(i)][shift(j)] = m[i][j]
            for r in range(v):
                new[r][v] = new[r][d]
                new[r][d] = 0
            new[v][d] = 1
            m = new
            case = "M3"
        if trace is not None:
            trace.add(k + 1, case, _freeze(m))
    return FishburnMatrix(_freeze(m))


def reduce_matrix(M: Sequence[Sequence[int]]) -> tuple[tuple[tuple[int, ...], ...], str]:
    """One reduction step, returning the smaller matrix and the case used."""
    m = [list(r) for r in M]
    d = len(m)
    mi = next(i for i in range(d) if m[i][d - 1])  # 0-based mindex
    if sum(m[mi]) > 1:
        m[mi][d - 1] -= 1
        return _freeze(m), "R1"
    if mi == d - 1:
        return _freeze([row[:-1] for row in m[:-1]]), "R2"
    for j in range(mi):
        m[j][d - 1] = m[j][mi]
        m[j][mi] = 0
    del m[mi]
    for row in m:
        del row[mi]
    return _freeze(m), "R3"


def matrix_to_asc(M: Sequence[Sequence[int]], trace: BijectionTrace | None = None) -> AscentSequence:
    M = FishburnMatrix(M)
    n = M.weight
    out = [0] * n
    cur = tuple(M)
    for k in range(n, 0, -1):
        d = len(cur)
        out[k - 1] = next(i for i in range(d) if cur[i][d - 1])
        if k > 1:
            cur, case = reduce_matrix(cur)
        else:
            case = "init"
        if trace is not None:
            trace.add(k, case, cur)
    return AscentSequence(out)


def rmatrix_to_asc_direct(M: Sequence[Sequence[int]]) -> AscentSequence:
    """Column-by-column read-off for matrices with positive diagonal.

    Column c contributes ``c-1`` repeated ``m[c][c]`` times, then ``c-2``
    repeated ``m[c-1][c]`` times, down to ``0`` repeated ``m[1][c]`` times.
    """
    M = FishburnMatrix(M)
    if not all(M.diagonal):
        raise NotRMatrix("a diagonal entry is zero")
    out: list[int] = []
    for c in range(M.dim):
        for r in range(c, -1, -1):
            out.extend([r] * M[r][c])
    return AscentSequence(out)


# ---------------------------------------------------------------------------
# ascent sequences <-> posets

def _levels(down: list[int]) -> tuple[list[int], list[int], int, int]:
    """(downset chain, level per element, ell, ell*) for bitmask downsets."""
    chain = sorted(set(down), key=lambda m: bin(m).count("1"))
    rank = {m: i for i, m in enumerate(chain)}
    level = [rank[x] for x in down]
    up_any = 0
    for x in down:
        up_any |= x
    ell_star = min(level[x] for x in range(len(down)) if not up_any >> x & 1)
    return chain, level, len(chain) - 1, ell_star


def asc_to_poset(a: Sequence[int], trace: BijectionTrace | None = None) -> IntervalOrderPoset:
    """Grow the poset one element per entry; element k is added at step k."""
    a = AscentSequence(a)
    if not a:
        return IntervalOrderPoset(0)
    down = [0]
    if trace is not None:
        trace.add(1, "init", Poset.from_downsets(down))
    for k in range(1, len(a)):
        v = a[k]
        chain, level, ell, ell_star = _levels(down)
        if v <= ell_star:
            down.append(chain[v])
            case = "P1"
        elif v == ell + 1:
            down.append((1 << k) - 1)
            case = "P2"
        else:
            up_any = 0
            for x in down:
                up_any |= x
            low_max = 0
            for x in range(k):
                if level[x] < v and not up_any >> x & 1:
                    low_max |= 1 << x
            for y in range(k):
                if level[y] >= v:
                    down[y] |= low_max
            down.append(chain[v])
            case = "P3"
        if trace is not None:
            trace.add(k + 1, case, Poset.from_downsets(down))
    return IntervalOrderPoset.from_downsets(down)


def remove_element(down: list[int], alive: int) -> tuple[int, int, str]:
    """One removal step on the sub-poset ``alive`` (bitmask of live elements).

    Mutates ``down`` in place and returns (removed element, ell*, case).
    """
    ids = _bits(alive)
    sub = [down[x] & alive for x in ids]
    chain = sorted(set(sub), key=lambda m: bin(m).count("1"))
    rank = {m: i for i, m in enumerate(chain)}
    level = {x: rank[d] for x, d in zip(ids, sub)}
    covered = 0
    for d in sub:
        covered |= d
    maximal = [x for x in ids if not covered >> x & 1]
    i = min(level[x] for x in maximal)
    at_level = [x for x in ids if level[x] == i]
    ell = len(chain) - 1
    if len(at_level) > 1:
        victim = max(x for x in maximal if level[x] == i)
        case = "Q1"
    elif i == ell:
        victim = at_level[0]
        case = "Q2"
    else:
        victim = at_level[0]
        freed = chain[i + 1] & ~chain[i]
        for x in ids:
            down[x] &= ~freed
        case = "Q3"
    return victim, i, case


def poset_to_asc(P: IntervalOrderPoset, trace: BijectionTrace | None = None) -> AscentSequence:
    if not isinstance(P, IntervalOrderPoset):
        P = IntervalOrderPoset.from_downsets(P.down)
    n = P.n
    down = list(P.down)
    alive = (1 << n) - 1
    out = [0] * n
    for k in range(n, 0, -1):
        victim, i, case = remove_element(down, alive)
        out[k - 1] = i
        alive &= ~(1 << victim)
        if trace is not None:
            trace.add(k, case if k > 1 else "init", victim)
    return AscentSequence(out)


# ---------------------------------------------------------------------------
# posets <-> matrices

def poset_to_matrix(P: IntervalOrderPoset) -> FishburnMatrix:
    """Entry (i, j) counts elements at level i-1 lying in block K_{j-1}."""
    if not isinstance(P, IntervalOrderPoset):
        P = IntervalOrderPoset.from_downsets(P.down)
    st = P.structure
    d = st.ell + 1
    m = [[0] * d for _ in range(d)]
    for x in range(P.n):
        m[st.level_of[x]][st.block_of[x]] += 1
    return FishburnMatrix(m)


def matrix_to_poset(M: Sequence[Sequence[int]]) -> IntervalOrderPoset:
    """Place elements into cells; x < y iff column(x) < row(y)."""
    M = FishburnMatrix(M)
    cells = [(i, j) for i in range(M.dim) for j in range(M.dim) for _ in range(M[i][j])]
    rel = [(x, y) for x, (_, cx) in enumerate(cells) for y, (ry, _) in enumerate(cells) if cx < ry]
    return IntervalOrderPoset(len(cells), rel)


# ---------------------------------------------------------------------------
# ascent sequences <-> permutations

def asc_to_perm(a: Sequence[int], trace: BijectionTrace | None = None) -> PatternPermutation:
    a = AscentSequence(a)
    perm: tuple[int, ...] = ()
    for k, v in enumerate(a, start=1):
        site = active_sites(perm)[v] if perm else 0
        perm = perm[:site] + (k,) + perm[site:]
        if trace is not None:
            trace.add(k, "init" if k == 1 else f"site{v}", perm)
    return tuple.__new__(PatternPermutation, perm)


def perm_to_asc(perm: Sequence[int], trace: BijectionTrace | None = None) -> AscentSequence:
    """Delete n, n-1, ..., 1 in turn, recording the active-site label each
    largest entry occupied."""
    perm = PatternPermutation(perm)
    n = len(perm)
    out = [0] * n
    cur = tuple(perm)
    for k in range(n, 0, -1):
        pos = cur.index(k)
        rest = cur[:pos] + cur[pos + 1:]
        sites = active_sites(rest)
        if pos not in sites:
            raise NotInAvoidanceClass(f"{tuple(perm)}: entry {k} is not at an active site")
        out[k - 1] = sites.index(pos)
        cur = rest
        if trace is not None:
            trace.add(k, "init" if k == 1 else f"site{out[k - 1]}", cur)
    return AscentSequence(out)


def rasc_to_perm_direct(a: Sequence[int]) -> PatternPermutation:
    """Concatenate, for each value i ascending, the positions holding i in
    decreasing order."""
    from .families import is_rasc

    a = AscentSequence(a)
    if not is_rasc(a):
        raise NotRAsc(f"{tuple(a)} is not self-modified")
    word: list[int] = []
    for value in range(max(a, default=-1) + 1):
        word.extend(j for j in range(len(a), 0, -1) if a[j - 1] == value)
    return PatternPermutation(word)


# ---------------------------------------------------------------------------
# composites

def poset_to_perm(P: IntervalOrderPoset) -> PatternPermutation:
    return asc_to_perm(poset_to_asc(P))


def perm_to_poset(perm: Sequence[int]) -> IntervalOrderPoset:
    return asc_to_poset(perm_to_asc(perm))


def matrix_to_perm(M: Sequence[Sequence[int]]) -> PatternPermutation:
    return asc_to_perm(matrix_to_asc(M))


def perm_to_matrix(perm: Sequence[int]) -> FishburnMatrix:
    return asc_to_matrix(perm_to_asc(perm))
