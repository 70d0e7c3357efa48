"""Exhaustive verification sweeps.

Each invariant is a function of a :class:`Universe` (all objects of one
size, generated lazily and cached) that returns ``None`` when it holds and a
counterexample otherwise.  Objects are scanned in generation order, which is
lexicographic, so the first counterexample found is the minimal one.

:func:`verify_sweep` runs every registered invariant for one size and
returns a :class:`SweepReport`.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Any, Callable, Iterable

from . import bijections as bij
from . import duality as dual
from . import families as fam
from .core import (
    AscentSequence,
    IntervalOrderPoset,
    active_sites,
    asc_count,
    insert_at_site,
    poset_structure,
)
from .enumeration import CAPS, gen_all_posets, gen_asc, gen_matrices, gen_perms, gen_posets, gen_rgf
from .isomorphism import (
    DEFAULT_CAP,
    N_POSET,
    THREE_PLUS_ONE,
    TWO_PLUS_TWO,
    CanonicalPoset,
    canonical_form,
    canonical_relation,
    contains_induced,
    poset_isomorphic,
)
from .patterns import contains_231, is_rgf, perm_contains_bivincular_231, seq_contains

__all__ = [
    "CanonicalPoset",
    "canonical_form",
    "canonical_relation",
    "contains_induced",
    "poset_isomorphic",
    "TWO_PLUS_TWO",
    "THREE_PLUS_ONE",
    "N_POSET",
    "DEFAULT_CAP",
    "Universe",
    "Invariant",
    "InvariantResult",
    "SweepReport",
    "REGISTRY",
    "verify_sweep",
]

POSET_SWEEP_CAP = 7
ALL_POSET_SWEEP_CAP = 6
TIERS = ("full", "sequences")


class Universe:
    """All objects of size n, plus cached images under the bijections."""

    def __init__(self, n: int):
        self.n = n

    @cached_property
    def asc(self) -> list[AscentSequence]:
        return list(gen_asc(self.n))

    @cached_property
    def matrices(self):
        return list(gen_matrices(self.n))

    @cached_property
    def perms(self):
        return list(gen_perms(self.n))

    @cached_property
    def posets(self) -> list[IntervalOrderPoset]:
        return gen_posets(self.n)

    @cached_property
    def rgfs(self):
        return list(gen_rgf(self.n))

    @cached_property
    def rasc(self):
        return [a for a in self.asc if fam.is_rasc(a)]

    @cached_property
    def casc(self):
        return [a for a in self.asc if fam.is_casc(a)]

    @cached_property
    def bam(self) -> dict:
        return {a: bij.asc_to_matrix(a) for a in self.asc}

    @cached_property
    def bas(self) -> dict:
        return {a: bij.asc_to_perm(a) for a in self.asc}

    @cached_property
    def bap(self) -> dict:
        return {a: bij.asc_to_poset(a) for a in self.asc}

    @cached_property
    def bpm(self) -> dict:
        return {P: bij.poset_to_matrix(P) for P in self.posets}

    @cached_property
    def rperms(self):
        return [p for p in self.perms if fam.is_rperm(p)]


@dataclass(frozen=True)
class Invariant:
    name: str
    module: str
    check: Callable[[Universe], Any]
    posets: bool = False
    max_n: int | None = None
    # an assertion left as an exercise rather than proved; a counterexample
    # is reported as "refuted" and does not fail the sweep
    unproved: bool = False


@dataclass(frozen=True)
class InvariantResult:
    name: str
    module: str
    status: str  # "pass", "fail", "refuted" or "skip"
    counterexample: Any = None

    @property
    def passed(self) -> bool:
        return self.status != "fail"


@dataclass
class SweepReport:
    n: int
    tier: str
    results: list[InvariantResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[InvariantResult]:
        return [r for r in self.results if r.status == "fail"]

    @property
    def refuted(self) -> list[InvariantResult]:
        return [r for r in self.results if r.status == "refuted"]

    def result(self, name: str) -> InvariantResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_text(self) -> str:
        lines = [f"verify n={self.n} tier={self.tier}"]
        for r in self.results:
            line = f"{r.status.upper():7} {r.name}"
            if r.status in ("fail", "refuted"):
                line += f"  counterexample: {r.counterexample!r}"
            lines.append(line)
        counts = {s: sum(r.status == s for r in self.results) for s in ("pass", "fail", "refuted", "skip")}
        lines.append("summary: " + ", ".join(f"{c} {s}" for s, c in counts.items()))
        return "\n".join(lines)


REGISTRY: list[Invariant] = []


def invariant(name: str, module: str, *, posets: bool = False, max_n: int | None = None, unproved: bool = False):
    def register(fn):
        REGISTRY.append(Invariant(name, module, fn, posets, max_n, unproved))
        return fn

    return register


def _first(items: Iterable, bad: Callable[[Any], bool]):
    for x in items:
        if bad(x):
            return x
    return None


def _set_mismatch(got: Iterable, want: Iterable):
    got, want = set(got), set(want)
    if got == want:
        return None
    return {"missing": sorted(want - got)[:3], "extra": sorted(got - want)[:3]}


def _poset_mismatch(got: Iterable[IntervalOrderPoset], want: Iterable[IntervalOrderPoset]):
    got_keys = {P.unlabelled_key: P for P in got}
    want_keys = {P.unlabelled_key: P for P in want}
    if got_keys.keys() == want_keys.keys():
        return None
    missing = [want_keys[k] for k in sorted(want_keys.keys() - got_keys.keys())][:3]
    extra = [got_keys[k] for k in sorted(got_keys.keys() - want_keys.keys())][:3]
    return {"missing": missing, "extra": extra}


# ---------------------------------------------------------------------------
# core

@invariant("core.asc_prefix_closed", "core")
def _(u: Universe):
    from .core import is_ascent_sequence

    return _first(u.asc, lambda a: not all(is_ascent_sequence(a[:k]) for k in range(len(a) + 1)))


@invariant("core.matrix_dim_le_weight", "core")
def _(u: Universe):
    return _first(u.matrices, lambda M: not M.dim <= M.weight)


@invariant("core.levels_equal_downsets", "core", posets=True)
def _(u: Universe):
    def bad(P):
        st = poset_structure(P)
        distinct = {P.down[x] for x in range(P.n)}
        return not (len(distinct) == len(st.levels) == st.ell + 1)

    return _first(u.posets, bad)


@invariant("core.active_sites_exact", "core")
def _(u: Universe):
    if u.n == 0:
        return None
    for p in gen_perms(u.n - 1):
        active = set(active_sites(p))
        for s in range(u.n):
            ok = not perm_contains_bivincular_231(insert_at_site(p, s, u.n))
            if ok != (s in active):
                return (p, s)
    return None


# ---------------------------------------------------------------------------
# bijections

@invariant("bij.asc_matrix_roundtrip", "bijections")
def _(u: Universe):
    return _first(u.asc, lambda a: bij.matrix_to_asc(u.bam[a]) != a)


@invariant("bij.matrix_asc_roundtrip", "bijections")
def _(u: Universe):
    return _first(u.matrices, lambda M: bij.asc_to_matrix(bij.matrix_to_asc(M)) != M)


@invariant("bij.asc_matrix_bijective", "bijections")
def _(u: Universe):
    images = list(u.bam.values())
    if len(set(images)) != len(images):
        return "asc_to_matrix is not injective"
    return _set_mismatch(images, u.matrices)


@invariant("bij.asc_perm_roundtrip", "bijections")
def _(u: Universe):
    return _first(u.asc, lambda a: bij.perm_to_asc(u.bas[a]) != a)


@invariant("bij.perm_asc_roundtrip", "bijections")
def _(u: Universe):
    return _first(u.perms, lambda p: bij.asc_to_perm(bij.perm_to_asc(p)) != p)


@invariant("bij.asc_perm_bijective", "bijections")
def _(u: Universe):
    images = list(u.bas.values())
    if len(set(images)) != len(images):
        return "asc_to_perm is not injective"
    return _set_mismatch(images, u.perms)


@invariant("bij.asc_perm_avoids", "bijections")
def _(u: Universe):
    return _first(u.asc, lambda a: perm_contains_bivincular_231(u.bas[a]))


@invariant("bij.matrix_poset_roundtrip", "bijections")
def _(u: Universe):
    return _first(u.matrices, lambda M: bij.poset_to_matrix(bij.matrix_to_poset(M)) != M)


@invariant("bij.poset_matrix_roundtrip", "bijections", posets=True)
def _(u: Universe):
    return _first(u.posets, lambda P: not poset_isomorphic(bij.matrix_to_poset(u.bpm[P]), P))


@invariant("bij.asc_poset_roundtrip", "bijections", posets=True)
def _(u: Universe):
    return _first(u.asc, lambda a: bij.poset_to_asc(u.bap[a]) != a)


@invariant("bij.poset_asc_roundtrip", "bijections", posets=True)
def _(u: Universe):
    return _first(u.posets, lambda P: not poset_isomorphic(bij.asc_to_poset(bij.poset_to_asc(P)), P))


@invariant("bij.asc_poset_bijective", "bijections", posets=True)
def _(u: Universe):
    images = list(u.bap.values())
    keys = [canonical_relation(P) for P in images]
    if len(set(keys)) != len(keys):
        return "asc_to_poset is not injective"
    want = {canonical_relation(P) for P in u.posets}
    return None if set(keys) == want else "image differs from the generated posets"


@invariant("bij.commutativity", "bijections", posets=True)
def _(u: Universe):
    return _first(u.posets, lambda P: u.bpm[P] != bij.asc_to_matrix(bij.poset_to_asc(P)))


@invariant("bij.case_labels", "bijections")
def _(u: Universe):
    pair = {"init": "init", "M1": "P1", "M2": "P2", "M3": "P3"}
    for a in u.asc:
        tm, tp = bij.BijectionTrace(), bij.BijectionTrace()
        bij.asc_to_matrix(a, tm)
        bij.asc_to_poset(a, tp)
        if len(tm) != u.n or [pair[c] for c in tm.cases] != tp.cases:
            return a
        for k in range(1, u.n):
            predicted = a[k - 1] < a[k] <= asc_count(a[:k])
            if predicted != (tm.cases[k] == "M3"):
                return a
    return None


@invariant("bij.restricted_closed_forms", "bijections")
def _(u: Universe):
    return _first(
        u.rasc,
        lambda a: bij.rasc_to_perm_direct(a) != u.bas[a] or bij.rmatrix_to_asc_direct(u.bam[a]) != a,
    )


WORKED_ASC = (0, 0, 1, 2, 0, 1)
WORKED_MATRIX = ((2, 1, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0), (0, 0, 0, 1))
WORKED_PERM = (5, 2, 1, 6, 3, 4)


@invariant("bij.worked_example", "bijections", posets=True)
def _(u: Universe):
    if u.n != len(WORKED_ASC):
        return None
    P = bij.asc_to_poset(WORKED_ASC)
    checks = (
        u.bam[WORKED_ASC] == WORKED_MATRIX,
        u.bas[WORKED_ASC] == WORKED_PERM,
        bij.matrix_to_asc(WORKED_MATRIX) == WORKED_ASC,
        bij.perm_to_asc(WORKED_PERM) == WORKED_ASC,
        bij.poset_to_matrix(P) == WORKED_MATRIX,
        poset_isomorphic(bij.matrix_to_poset(WORKED_MATRIX), P),
        bij.perm_to_poset(WORKED_PERM) == P,
        bij.poset_to_perm(P) == WORKED_PERM,
    )
    return None if all(checks) else checks


# ---------------------------------------------------------------------------
# patterns

def _naive_bivincular(p) -> bool:
    from itertools import combinations

    return any(
        j == i + 1 and p[k] < p[i] < p[j] and p[i] == p[k] + 1
        for i, j, k in combinations(range(len(p)), 3)
    )


@invariant("pat.bivincular_vs_naive", "patterns")
def _(u: Universe):
    from itertools import permutations

    return _first(
        permutations(range(1, u.n + 1)),
        lambda p: perm_contains_bivincular_231(p) != _naive_bivincular(p),
    )


@invariant("pat.231_vs_naive", "patterns")
def _(u: Universe):
    return _first(u.perms, lambda p: contains_231(p) != seq_contains(p, (1, 2, 0)))


@invariant("pat.subsequence_monotone", "patterns")
def _(u: Universe):
    pats = [(1, 0, 1), (0, 1, 0, 1), (1, 0, 1, 0)]

    def bad(a):
        for i in range(len(a)):
            sub = a[:i] + a[i + 1:]
            for p in pats:
                if seq_contains(sub, p) and not seq_contains(a, p):
                    return True
        return False

    return _first(u.asc, bad)


@invariant("pat.catalan_equivalences", "patterns")
def _(u: Universe):
    def bad(a):
        c0101, c1010 = seq_contains(a, (0, 1, 0, 1)), seq_contains(a, (1, 0, 1, 0))
        conds = (
            not seq_contains(a, (1, 0, 1)),
            not c0101 and not c1010,
            not c0101,
            not c0101 and not c1010 and is_rgf(a),
        )
        return len(set(conds)) != 1

    return _first(u.asc, bad)


@invariant("pat.rgf_containments", "patterns")
def _(u: Universe):
    from .core import is_ascent_sequence

    bad = _first(u.rasc, lambda a: not is_rgf(a)) or _first(u.rgfs, lambda r: not is_ascent_sequence(r))
    if bad:
        return bad
    if u.n == 4 and not (is_rgf((0, 1, 0, 1)) and not fam.is_rasc((0, 1, 0, 1))):
        return (0, 1, 0, 1)
    if u.n == 5 and not (is_ascent_sequence((0, 1, 0, 1, 3)) and not is_rgf((0, 1, 0, 1, 3))):
        return (0, 1, 0, 1, 3)
    return None


@invariant("pat.barred_image", "patterns")
def _(u: Universe):
    return _set_mismatch((u.bas[a] for a in u.rasc), u.rperms)


# ---------------------------------------------------------------------------
# families

@invariant("fam.R_matrix_image", "families")
def _(u: Universe):
    return _set_mismatch((u.bam[a] for a in u.rasc), (M for M in u.matrices if fam.is_rmatrix(M)))


@invariant("fam.R_perm_image", "families")
def _(u: Universe):
    return _set_mismatch((u.bas[a] for a in u.rasc), u.rperms)


@invariant("fam.R_poset_image", "families", posets=True)
def _(u: Universe):
    return _set_mismatch(
        (u.bpm[P] for P in u.posets if fam.is_rposet(P)),
        (M for M in u.matrices if fam.is_rmatrix(M)),
    )


@invariant("fam.C_poset_image", "families", posets=True)
def _(u: Universe):
    return _poset_mismatch((u.bap[a] for a in u.casc), (P for P in u.posets if fam.is_series_parallel(P)))


@invariant("fam.C_matrix_image", "families", posets=True)
def _(u: Universe):
    return _set_mismatch(
        (u.bpm[P] for P in u.posets if fam.is_series_parallel(P)),
        (M for M in u.matrices if fam.is_se_free(M)),
    )


@invariant("fam.C_perm_image", "families")
def _(u: Universe):
    return _set_mismatch((u.bas[a] for a in u.casc), (p for p in u.perms if not contains_231(p)))


@invariant("fam.nesting", "families")
def _(u: Universe):
    return (
        _first(u.asc, lambda a: fam.is_casc(a) and not fam.is_rasc(a))
        or _first(u.matrices, lambda M: fam.is_se_free(M) and not fam.is_rmatrix(M))
        or _first(u.perms, lambda p: not contains_231(p) and not fam.is_rperm(p))
    )


@invariant("fam.poset_nesting", "families", posets=True)
def _(u: Universe):
    return _first(u.posets, lambda P: fam.is_series_parallel(P) and not fam.is_rposet(P))


@invariant("fam.diagonal_zero_criterion", "families")
def _(u: Universe):
    def bad(a):
        has_zero = not all(u.bam[a].diagonal)
        predicted = any(a[i] < a[i + 1] <= asc_count(a[: i + 1]) for i in range(len(a) - 1))
        return has_zero != predicted

    return _first(u.asc, bad)


@invariant("fam.semiorder_agreement", "families", posets=True)
def _(u: Universe):
    return _first(
        u.matrices,
        lambda M: fam.is_semiorder_matrix(M) != fam.is_semiorder_poset(bij.matrix_to_poset(M)),
    )


@invariant("fam.rposet_criteria", "families", posets=True)
def _(u: Universe):
    # is_rposet raises InconsistentCriteria on disagreement
    try:
        for P in u.posets:
            fam.is_rposet(P)
    except fam.InconsistentCriteria as exc:
        return str(exc)
    return None


# ---------------------------------------------------------------------------
# duality

@invariant("dual.flip_involution", "duality")
def _(u: Universe):
    return _first(u.matrices, lambda M: dual.matrix_flip(dual.matrix_flip(M)) != M)


@invariant("dual.flip_transport", "duality", posets=True)
def _(u: Universe):
    return _first(u.posets, lambda P: bij.poset_to_matrix(dual.poset_dual(P)) != dual.matrix_flip(u.bpm[P]))


@invariant("dual.poset_involution", "duality", posets=True)
def _(u: Universe):
    return _first(u.posets, lambda P: not poset_isomorphic(dual.poset_dual(dual.poset_dual(P)), P))


@invariant("dual.asc_dual_forms", "duality")
def _(u: Universe):
    def bad(a):
        d = dual.asc_dual(a)
        return d != dual.panorama(a) or d != bij.matrix_to_asc(dual.matrix_flip(u.bam[a]))

    return _first(u.rasc, bad)


@invariant("dual.asc_dual_via_posets", "duality", posets=True)
def _(u: Universe):
    return _first(u.rasc, lambda a: bij.poset_to_asc(dual.poset_dual(u.bap[a])) != dual.asc_dual(a))


@invariant("dual.asc_dual_involution", "duality")
def _(u: Universe):
    return _first(u.rasc, lambda a: dual.asc_dual(dual.asc_dual(a)) != a)


@invariant("dual.perm_dual_transport", "duality")
def _(u: Universe):
    def bad(a):
        via_asc = bij.asc_to_perm(dual.asc_dual(a))
        closed = dual.inverse(dual.complement(dual.reverse(u.bas[a])))
        return via_asc != closed or dual.perm_dual(u.bas[a]) != via_asc

    return _first(u.rasc, bad)


@invariant("dual.perm_dual_involution", "duality")
def _(u: Universe):
    return _first(u.rperms, lambda p: dual.perm_dual(dual.perm_dual(p)) != p)


@invariant("dual.panorama_is_rgf", "duality")
def _(u: Universe):
    return _first(u.asc, lambda a: not is_rgf(dual.panorama(a)))


@invariant("dual.panorama_of_rgf_in_rasc", "duality", unproved=True)
def _(u: Universe):
    # false from n = 7 on: (0,1,0,2,0,1,2) pans to (0,0,1,1,2,1,2)
    return _first(u.rgfs, lambda r: not fam.is_rasc(dual.panorama(r)))


@invariant("dual.panorama_squared", "duality")
def _(u: Universe):
    return _first(u.asc, lambda a: (dual.panorama(dual.panorama(a)) == a) != fam.is_rasc(a))


# ---------------------------------------------------------------------------
# enumeration

@invariant("enum.family_counts_agree", "enumerate")
def _(u: Universe):
    counts = {"Asc": len(u.asc), "Matrices": len(u.matrices), "Perms": len(u.perms)}
    if len(set(counts.values())) != 1:
        return counts
    return None


@invariant("enum.poset_count_agrees", "enumerate", posets=True)
def _(u: Universe):
    if len(u.posets) != len(u.asc):
        return {"Posets": len(u.posets), "Asc": len(u.asc)}
    return None


@invariant("enum.tier_counts_two_ways", "enumerate")
def _(u: Universe):
    filtered = {
        "R": (len(u.rasc), sum(fam.is_rmatrix(M) for M in u.matrices), len(u.rperms)),
        "C": (
            len(u.casc),
            sum(fam.is_se_free(M) for M in u.matrices),
            sum(not contains_231(p) for p in u.perms),
        ),
    }
    mapped = {
        "R": sum(fam.is_rmatrix(u.bam[a]) for a in u.asc),
        "C": sum(fam.is_se_free(bij.asc_to_matrix(bij.perm_to_asc(p))) for p in u.perms if not contains_231(p)),
    }
    for tier, counts in filtered.items():
        if len(set(counts)) != 1 or counts[0] != mapped[tier]:
            return {tier: (counts, mapped[tier])}
    return None


@invariant("enum.catalan_count", "enumerate")
def _(u: Universe):
    catalan = comb(2 * u.n, u.n) // (u.n + 1)
    return None if len(u.casc) == catalan else (len(u.casc), catalan)


@invariant("enum.posets_match_all_posets", "enumerate", posets=True, max_n=ALL_POSET_SWEEP_CAP)
def _(u: Universe):
    brute = {canonical_relation(P) for P in gen_all_posets(u.n) if not contains_induced(P, TWO_PLUS_TWO)}
    ours = {canonical_relation(P) for P in u.posets}
    return None if brute == ours else {"brute": len(brute), "generated": len(ours)}


# ---------------------------------------------------------------------------
# oracle self-checks

@invariant("oracle.two_plus_two_tests_agree", "oracle", posets=True, max_n=ALL_POSET_SWEEP_CAP)
def _(u: Universe):
    return _first(
        gen_all_posets(u.n),
        lambda P: P.is_two_plus_two_free() == contains_induced(P, TWO_PLUS_TWO),
    )


@invariant("oracle.canonical_vs_isomorphic", "oracle", posets=True, max_n=ALL_POSET_SWEEP_CAP)
def _(u: Universe):
    # every pair of generated posets, plus each poset against a shuffled copy
    rng = random.Random(u.n)
    forms = [canonical_form(P) for P in u.posets]
    for i, P in enumerate(u.posets):
        order = list(range(P.n))
        rng.shuffle(order)
        Q = P.relabel(order)
        fq = canonical_form(Q)
        if not (poset_isomorphic(P, Q) and fq == forms[i] and P == Q):
            return (P, Q)
        for j in range(i + 1, len(u.posets)):
            R = u.posets[j]
            iso = poset_isomorphic(P, R)
            same = forms[i].relation == forms[j].relation
            same_key = forms[i].matrix_key == forms[j].matrix_key
            if not (iso == same == same_key == (P == R)):
                return (P, R)
    return None


# ---------------------------------------------------------------------------

def default_tier(n: int) -> str:
    return "full" if n <= POSET_SWEEP_CAP else "sequences"


def verify_sweep(n: int, tier: str | None = None, names: Iterable[str] | None = None) -> SweepReport:
    """Run the registered invariants on every object of size n.

    ``tier="sequences"`` skips the isomorphism-heavy poset invariants;
    the default is ``"full"`` up to n = 7 and ``"sequences"`` above.
    ``names`` restricts the run to the given invariant names.
    """
    tier = tier or default_tier(n)
    if tier not in TIERS:
        raise ValueError(f"unknown tier {tier!r}; expected one of {TIERS}")
    wanted = set(names) if names is not None else None
    u = Universe(n)
    report = SweepReport(n, tier)
    for inv in REGISTRY:
        if wanted is not None and inv.name not in wanted:
            continue
        skip = (inv.posets and (tier == "sequences" or n > CAPS.posets)) or (
            inv.max_n is not None and n > inv.max_n
        )
        if skip:
            report.results.append(InvariantResult(inv.name, inv.module, "skip"))
            continue
        bad = inv.check(u)
        if bad is None:
            status = "pass"
        else:
            status = "refuted" if inv.unproved else "fail"
        report.results.append(InvariantResult(inv.name, inv.module, status, bad))
    return report
