"""Membership predicates for the restricted (R) and Catalan (C) sub-families,
plus the semiorder criteria."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bijections import poset_to_matrix
from .core import (
    AscentSequence,
    FishburnMatrix,
    IntervalOrderPoset,
    Poset,
    PatternPermutation,
    asc_count,
    is_ascent_sequence,
)
from .isomorphism import N_POSET, THREE_PLUS_ONE, TWO_PLUS_TWO, contains_induced
from .patterns import (
    contains_231,
    perm_avoids_barred_31524,
    perm_contains_bivincular_231,
    seq_contains,
)


class InconsistentCriteria(AssertionError):
    """Two characterizations that must agree did not."""


def _rasc_by_ascents(a: Sequence[int]) -> bool:
    for k in range(1, len(a)):
        if not (a[k] <= a[k - 1] or a[k] == 1 + asc_count(a[:k])):
            return False
    return True


def _rasc_by_max(a: Sequence[int]) -> bool:
    top = a[0] if a else 0
    for k in range(1, len(a)):
        if not (a[k] <= a[k - 1] or a[k] == 1 + top):
            return False
        top = max(top, a[k])
    return True


def is_rasc(a: Sequence[int]) -> bool:
    """Self-modified ascent sequence: every ascent jumps as high as allowed.

    Both the ascent-count form and the running-maximum form are evaluated;
    disagreement raises :class:`InconsistentCriteria`.
    """
    a = AscentSequence(a)
    by_asc, by_max = _rasc_by_ascents(a), _rasc_by_max(a)
    if by_asc != by_max:
        raise InconsistentCriteria(f"RAsc criteria disagree on {tuple(a)}")
    return by_asc


def is_casc(a: Sequence[int]) -> bool:
    return not seq_contains(AscentSequence(a), (1, 0, 1))


def is_rmatrix(M: Sequence[Sequence[int]]) -> bool:
    return all(FishburnMatrix(M).diagonal)


def se_pairs(M: Sequence[Sequence[int]]) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Pairs of non-zero entries (i,j), (i',j') with i < i', j < j', i' <= j
    (1-based)."""
    M = FishburnMatrix(M)
    nz = [(i + 1, j + 1) for i in range(M.dim) for j in range(M.dim) if M[i][j]]
    return [
        (p, q)
        for p in nz
        for q in nz
        if p[0] < q[0] and p[1] < q[1] and q[0] <= p[1]
    ]


def is_se_free(M: Sequence[Sequence[int]]) -> bool:
    return not se_pairs(M)


def longest_chain(P: Poset) -> int:
    """Number of elements in a longest chain (longest path in the order DAG)."""
    # elements sorted by downset size form a linear extension
    order = sorted(range(P.n), key=lambda x: bin(P.down[x]).count("1"))
    best = [1] * P.n
    for y in order:
        for x in range(P.n):
            if P.less(x, y):
                best[y] = max(best[y], best[x] + 1)
    return max(best, default=0)


def is_rposet(P: IntervalOrderPoset) -> bool:
    """Has a chain meeting every level.

    Cross-checked against positivity of the diagonal of the poset's
    Fishburn matrix.
    """
    if not isinstance(P, IntervalOrderPoset):
        P = IntervalOrderPoset.from_downsets(P.down)
    if P.n == 0:
        return True
    by_chain = longest_chain(P) == P.structure.ell + 1
    by_matrix = all(poset_to_matrix(P).diagonal)
    if by_chain != by_matrix:
        raise InconsistentCriteria(f"RPoset criteria disagree on {P!r}")
    return by_chain


def is_rperm(perm: Sequence[int]) -> bool:
    return perm_avoids_barred_31524(PatternPermutation(perm))


def is_cperm(perm: Sequence[int]) -> bool:
    return not contains_231(PatternPermutation(perm))


def is_series_parallel(P: Poset) -> bool:
    """N-free: no 4 elements inducing e<h, f<h, f<g and nothing else."""
    return not contains_induced(P, N_POSET)


def is_semiorder_poset(P: Poset) -> bool:
    return not contains_induced(P, TWO_PLUS_TWO) and not contains_induced(P, THREE_PLUS_ONE)


def is_semiorder_matrix(M: Sequence[Sequence[int]]) -> bool:
    """No non-zero m[i][j], m[i'][j'] with i > i' and j < j'."""
    M = FishburnMatrix(M)
    nz = [(i, j) for i in range(M.dim) for j in range(M.dim) if M[i][j]]
    return not any(i > i2 and j < j2 for i, j in nz for i2, j2 in nz)


@dataclass(frozen=True)
class FamilyTag:
    family: str  # "Asc", "Matrices", "Posets" or "Perms"
    in_classical: bool
    in_R: bool
    in_C: bool

    def __post_init__(self):
        if (self.in_C and not self.in_R) or (self.in_R and not self.in_classical):
            raise InconsistentCriteria(f"family nesting violated: {self}")


def classify_asc(entries: Sequence[int]) -> FamilyTag:
    if not is_ascent_sequence(entries):
        return FamilyTag("Asc", False, False, False)
    return FamilyTag("Asc", True, is_rasc(entries), is_casc(entries))


def classify_matrix(M: Sequence[Sequence[int]]) -> FamilyTag:
    return FamilyTag("Matrices", True, is_rmatrix(M), is_se_free(M))


def classify_poset(P: Poset) -> FamilyTag:
    if not P.is_two_plus_two_free():
        return FamilyTag("Posets", False, False, False)
    P = IntervalOrderPoset.from_downsets(P.down)
    return FamilyTag("Posets", True, is_rposet(P), is_series_parallel(P))


def classify_perm(perm: Sequence[int]) -> FamilyTag:
    if perm_contains_bivincular_231(perm):
        return FamilyTag("Perms", False, False, False)
    return FamilyTag("Perms", True, is_rperm(perm), is_cperm(perm))
