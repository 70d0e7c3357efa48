"""Domain types for the four Fishburn families.

* :class:`AscentSequence` -- tuple of ints, ``a[0] == 0`` and each entry at
  most one more than the number of ascents before it.
* :class:`FishburnMatrix` -- tuple of row tuples; upper triangular,
  non-negative, no zero row or column.
* :class:`Poset` / :class:`IntervalOrderPoset` -- finite strict orders stored
  as per-element downset bitmasks; the interval-order subclass requires the
  strict downsets to be linearly ordered by inclusion ((2+2)-freeness).
* :class:`PatternPermutation` -- one-line permutation of 1..n avoiding
  2|3-1bar.

Python indexing is 0-based throughout; error payloads and text formats use
1-based positions, while ascent-sequence values and level indices are
0-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .patterns import perm_contains_bivincular_231


class FishburnError(ValueError):
    """Base class for invalid-object errors raised by this package."""


class NotAscentSequence(FishburnError):
    def __init__(self, position: int, entries: Sequence[int]):
        self.position = position
        super().__init__(f"not an ascent sequence: violation at position {position} in {tuple(entries)}")


class MalformedMatrix(FishburnError):
    pass


class NotUpperTriangular(FishburnError):
    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(f"non-zero entry below the diagonal at ({i},{j})")


class NegativeEntry(FishburnError):
    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(f"negative entry at ({i},{j})")


class ZeroRow(FishburnError):
    def __init__(self, i: int):
        self.i = i
        super().__init__(f"row {i} is all zeros")


class ZeroColumn(FishburnError):
    def __init__(self, j: int):
        self.j = j
        super().__init__(f"column {j} is all zeros")


class NotAPoset(FishburnError):
    pass


class NotTwoPlusTwoFree(FishburnError):
    pass


class NotAPermutation(FishburnError):
    pass


class NotInAvoidanceClass(FishburnError):
    pass


class NotRAsc(FishburnError):
    pass


class NotRMatrix(FishburnError):
    pass


class NotRPerm(FishburnError):
    pass


class SizeCapExceeded(FishburnError):
    pass


class ParseError(FishburnError):
    pass


# ---------------------------------------------------------------------------
# ascent sequences

def asc_count(entries: Sequence[int]) -> int:
    """Number of indices i with entries[i] < entries[i+1]."""
    return sum(1 for x, y in zip(entries, entries[1:]) if x < y)


def _first_asc_violation(entries: Sequence[int]) -> int | None:
    ascents = 0
    for k, v in enumerate(entries):
        if isinstance(v, bool) or not isinstance(v, int):
            return k + 1
        if k == 0:
            if v != 0:
                return 1
            continue
        if v < 0 or v > ascents + 1:
            return k + 1
        if entries[k - 1] < v:
            ascents += 1
    return None


class AscentSequence(tuple):
    """An ascent sequence; the empty sequence is allowed."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[int] = ()):
        if isinstance(entries, AscentSequence):
            return entries
        entries = tuple(entries)
        bad = _first_asc_violation(entries)
        if bad is not None:
            raise NotAscentSequence(bad, entries)
        return super().__new__(cls, entries)

    @property
    def ascents(self) -> int:
        return asc_count(self)

    def prefix(self, k: int) -> "AscentSequence":
        return tuple.__new__(AscentSequence, self[:k])

    def __repr__(self) -> str:
        return f"AscentSequence({tuple(self)})"


def validate_asc(entries: Iterable[int]) -> AscentSequence:
    return AscentSequence(entries)


def is_ascent_sequence(entries: Sequence[int]) -> bool:
    return _first_asc_violation(entries) is None


# ---------------------------------------------------------------------------
# Fishburn matrices

class FishburnMatrix(tuple):
    """Upper-triangular non-negative integer matrix with no zero row/column.

    Rows are tuples; ``M[i][j]`` is 0-based.  ``mindex`` is 1-based to match
    the recursive matrix constructions.
    """

    __slots__ = ()

    def __new__(cls, rows: Iterable[Iterable[int]] = ()):
        if isinstance(rows, FishburnMatrix):
            return rows
        rows = tuple(tuple(r) for r in rows)
        d = len(rows)
        for i, row in enumerate(rows):
            if len(row) != d:
                raise MalformedMatrix(f"row {i + 1} has length {len(row)}, expected {d}")
            for j, v in enumerate(row):
                if isinstance(v, bool) or not isinstance(v, int):
                    raise MalformedMatrix(f"entry ({i + 1},{j + 1}) is not an integer")
                if v < 0:
                    raise NegativeEntry(i + 1, j + 1)
                if v and i > j:
                    raise NotUpperTriangular(i + 1, j + 1)
        for i, row in enumerate(rows):
            if not any(row):
                raise ZeroRow(i + 1)
        for j in range(d):
            if not any(rows[i][j] for i in range(d)):
                raise ZeroColumn(j + 1)
        return super().__new__(cls, rows)

    @property
    def dim(self) -> int:
        return len(self)

    @property
    def weight(self) -> int:
        return sum(map(sum, self))

    @property
    def mindex(self) -> int:
        """Lowest (1-based) row index whose last-column entry is non-zero."""
        d = len(self)
        for i in range(d):
            if self[i][d - 1]:
                return i + 1
        raise MalformedMatrix("empty matrix has no mindex")

    def rowsum(self, i: int) -> int:
        """Sum of row ``i`` (1-based)."""
        return sum(self[i - 1])

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self[i][i] for i in range(len(self)))

    def __repr__(self) -> str:
        return f"FishburnMatrix({[list(r) for r in self]})"


def validate_matrix(grid: Iterable[Iterable[int]]) -> FishburnMatrix:
    return FishburnMatrix(grid)


# ---------------------------------------------------------------------------
# posets

def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _closure(n: int, relations: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    """Strict downset bitmasks of the transitive closure; raises on cycles."""
    down = [0] * n
    for a, b in relations:
        if not (0 <= a < n and 0 <= b < n):
            raise NotAPoset(f"relation {a}<{b} out of range for n={n}")
        if a == b:
            raise NotAPoset(f"reflexive relation on element {a}")
        down[b] |= 1 << a
    changed = True
    while changed:
        changed = False
        for x in range(n):
            acc = down[x]
            for y in _bits(down[x]):
                acc |= down[y]
            if acc != down[x]:
                down[x] = acc
                changed = True
    for x in range(n):
        if down[x] >> x & 1:
            raise NotAPoset("relations contain a cycle")
    return tuple(down)


@dataclass(frozen=True)
class PosetStructure:
    """Level data of an interval order.

    ``downsets`` is the chain D_0 < ... < D_ell, ``levels[i]`` the elements
    whose strict downset is D_i and ``blocks[j]`` is K_j = D_{j+1} minus D_j
    (with D_{ell+1} the whole ground set).  All sets are frozensets of
    0-based element ids.
    """

    downsets: tuple[frozenset, ...]
    levels: tuple[frozenset, ...]
    blocks: tuple[frozenset, ...]
    ell: int
    ell_star: int
    level_of: tuple[int, ...]
    block_of: tuple[int, ...]


class Poset:
    """A finite strict partial order on ``range(n)``.

    ``relations`` are pairs ``(a, b)`` meaning a < b; the transitive closure
    is taken, so cover relations suffice.  Equality is labelled equality.
    """

    def __init__(self, n: int, relations: Iterable[tuple[int, int]] = ()):
        self.n = n
        self.down = _closure(n, relations)

    @classmethod
    def from_downsets(cls, down: Sequence[int]):
        """Build from bitmask downsets that are already transitively closed."""
        obj = cls.__new__(cls)
        obj.n = len(down)
        obj.down = tuple(down)
        obj._check()
        return obj

    def _check(self) -> None:
        pass

    def less(self, a: int, b: int) -> bool:
        return bool(self.down[b] >> a & 1)

    def downset(self, x: int) -> frozenset:
        return frozenset(_bits(self.down[x]))

    @cached_property
    def up(self) -> tuple[int, ...]:
        up = [0] * self.n
        for b in range(self.n):
            for a in _bits(self.down[b]):
                up[a] |= 1 << b
        return tuple(up)

    def upset(self, x: int) -> frozenset:
        return frozenset(_bits(self.up[x]))

    def relations(self) -> list[tuple[int, int]]:
        return sorted((a, b) for b in range(self.n) for a in _bits(self.down[b]))

    def covers(self) -> list[tuple[int, int]]:
        """Cover pairs (a, b): a < b with nothing strictly between."""
        out = []
        for b in range(self.n):
            for a in _bits(self.down[b]):
                if not (self.up[a] & self.down[b]):
                    out.append((a, b))
        return sorted(out)

    def maximal(self) -> list[int]:
        return [x for x in range(self.n) if not self.up[x]]

    def dual(self):
        return type(self).from_downsets(self.up)

    def induced(self, elements: Sequence[int]) -> "Poset":
        index = {x: i for i, x in enumerate(elements)}
        rel = [(index[a], index[b]) for b in elements for a in _bits(self.down[b]) if a in index]
        return Poset(len(elements), rel)

    def relabel(self, order: Sequence[int]):
        """Poset whose element ``i`` is old element ``order[i]``."""
        pos = {x: i for i, x in enumerate(order)}
        down = [0] * self.n
        for i, x in enumerate(order):
            for a in _bits(self.down[x]):
                down[i] |= 1 << pos[a]
        return type(self).from_downsets(down)

    def is_two_plus_two_free(self) -> bool:
        """Strict downsets linearly ordered by inclusion."""
        ds = sorted(set(self.down), key=lambda m: bin(m).count("1"))
        return all(ds[i] & ds[i + 1] == ds[i] for i in range(len(ds) - 1))

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return type(other) is type(self) and self.down == other.down

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.down))

    def __repr__(self) -> str:
        rel = ",".join(f"{a + 1}<{b + 1}" for a, b in self.covers())
        return f"{type(self).__name__}(n={self.n}; {rel})"


class IntervalOrderPoset(Poset):
    """A (2+2)-free poset.

    Equality and hashing are on the unlabelled poset: two interval orders
    compare equal iff they are isomorphic.  The key used is the multiset of
    (level, block) pairs, which determines the poset up to isomorphism.
    """

    def __init__(self, n: int, relations: Iterable[tuple[int, int]] = ()):
        super().__init__(n, relations)
        self._check()

    def _check(self) -> None:
        if not self.is_two_plus_two_free():
            raise NotTwoPlusTwoFree("strict downsets are not linearly ordered by inclusion")

    @cached_property
    def structure(self) -> PosetStructure:
        return poset_structure(self)

    @cached_property
    def unlabelled_key(self) -> tuple:
        st = self.structure
        return (self.n, tuple(sorted(zip(st.level_of, st.block_of))))

    def __eq__(self, other) -> bool:
        return isinstance(other, IntervalOrderPoset) and self.unlabelled_key == other.unlabelled_key

    def __hash__(self) -> int:
        return hash(self.unlabelled_key)


def poset_structure(P: Poset) -> PosetStructure:
    """Downset chain, levels, K-blocks, ell and ell* of a (2+2)-free poset."""
    if not P.is_two_plus_two_free():
        raise NotTwoPlusTwoFree("strict downsets are not linearly ordered by inclusion")
    n = P.n
    if n == 0:
        return PosetStructure((), (), (), -1, -1, (), ())
    chain = sorted(set(P.down), key=lambda m: bin(m).count("1"))
    rank = {m: i for i, m in enumerate(chain)}
    level_of = tuple(rank[P.down[x]] for x in range(n))
    ell = len(chain) - 1
    full = (1 << n) - 1
    bounds = chain + [full]
    block_of = [0] * n
    for j in range(ell + 1):
        for x in _bits(bounds[j + 1] & ~bounds[j]):
            block_of[x] = j
    levels = tuple(frozenset(x for x in range(n) if level_of[x] == i) for i in range(ell + 1))
    blocks = tuple(frozenset(x for x in range(n) if block_of[x] == j) for j in range(ell + 1))
    ell_star = min(level_of[x] for x in P.maximal())
    return PosetStructure(
        downsets=tuple(frozenset(_bits(m)) for m in chain),
        levels=levels,
        blocks=blocks,
        ell=ell,
        ell_star=ell_star,
        level_of=level_of,
        block_of=tuple(block_of),
    )


def chain_poset(k: int) -> IntervalOrderPoset:
    return IntervalOrderPoset(k, [(i, i + 1) for i in range(k - 1)])


def antichain_poset(k: int) -> IntervalOrderPoset:
    return IntervalOrderPoset(k)


# ---------------------------------------------------------------------------
# permutations

def _check_permutation(word: Sequence[int]) -> None:
    n = len(word)
    if sorted(word) != list(range(1, n + 1)):
        raise NotAPermutation(f"{tuple(word)} is not a permutation of 1..{n}")


class PatternPermutation(tuple):
    """A permutation of 1..n (one-line notation) avoiding 2|3-1bar."""

    __slots__ = ()

    def __new__(cls, word: Iterable[int] = ()):
        if isinstance(word, PatternPermutation):
            return word
        word = tuple(word)
        _check_permutation(word)
        if perm_contains_bivincular_231(word):
            raise NotInAvoidanceClass(f"{word} contains 2|3-1bar")
        return super().__new__(cls, word)

    def __repr__(self) -> str:
        return f"PatternPermutation({tuple(self)})"


def active_sites(perm: Sequence[int]) -> list[int]:
    """Active insertion sites of ``perm``, left to right.

    Site ``s`` is the gap just before ``perm[s]`` (site ``len(perm)`` is the
    end).  The returned list is indexed by site label, so
    ``active_sites(p)[label]`` is the gap carrying that label.
    """
    n = len(perm)
    where = {v: i for i, v in enumerate(perm)}
    sites = [0]
    for i in range(n - 1):
        v = perm[i]
        if v == 1 or where.get(v - 1, n) < i:
            sites.append(i + 1)
    if n:
        sites.append(n)
    return sites


def render_active_sites(perm: Sequence[int]) -> str:
    """``521634`` -> ``"_0 5 2 1 _1 6 _2 3 _3 4 _4"``."""
    label = {s: k for k, s in enumerate(active_sites(perm))}
    parts = []
    for s in range(len(perm) + 1):
        if s in label:
            parts.append(f"_{label[s]}")
        if s < len(perm):
            parts.append(str(perm[s]))
    return " ".join(parts)


def insert_at_site(perm: Sequence[int], site: int, value: int) -> tuple[int, ...]:
    return tuple(perm[:site]) + (value,) + tuple(perm[site:])


# ---------------------------------------------------------------------------
# text formats

def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise ParseError(f"cannot parse integer list {text!r}") from exc


def parse_asc(text: str) -> AscentSequence:
    return AscentSequence(_ints(text))


def format_seq(seq: Sequence[int]) -> str:
    return ",".join(str(v) for v in seq)


def parse_matrix(text: str) -> FishburnMatrix:
    text = text.strip()
    if not text:
        return FishburnMatrix(())
    return FishburnMatrix(_ints(row) for row in text.split(";"))


def format_matrix(M: Sequence[Sequence[int]]) -> str:
    return ";".join(format_seq(row) for row in M)


def parse_perm(text: str) -> PatternPermutation:
    return PatternPermutation(_ints(text))


def parse_poset(text: str, cls=IntervalOrderPoset) -> Poset:
    """``"n=6;1<3,2<3,5<3,1<6,2<6,3<4"`` with 1-based labels 1..n."""
    text = text.strip()
    head, _, body = text.partition(";")
    head = head.strip()
    if not head.startswith("n="):
        raise ParseError(f"poset text must start with 'n=<count>;': {text!r}")
    try:
        n = int(head[2:])
    except ValueError as exc:
        raise ParseError(f"bad element count in {text!r}") from exc
    rel = []
    for item in body.split(","):
        item = item.strip()
        if not item:
            continue
        a, sep, b = item.partition("<")
        if not sep:
            raise ParseError(f"bad relation {item!r}")
        try:
            a_, b_ = int(a) - 1, int(b) - 1
        except ValueError as exc:
            raise ParseError(f"bad relation {item!r}") from exc
        if not (0 <= a_ < n and 0 <= b_ < n):
            raise ParseError(f"label out of range 1..{n} in {item!r}")
        rel.append((a_, b_))
    return cls(n, rel)


def format_poset(P: Poset) -> str:
    return f"n={P.n};" + ",".join(f"{a + 1}<{b + 1}" for a, b in P.covers())


def canonical_labelling(P: IntervalOrderPoset) -> IntervalOrderPoset:
    """Relabel by (level, block) so isomorphic interval orders print alike."""
    st = P.structure
    order = sorted(range(P.n), key=lambda x: (st.level_of[x], st.block_of[x], x))
    return P.relabel(order)
