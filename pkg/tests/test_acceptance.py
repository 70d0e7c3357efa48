"""Acceptance criteria 1-8, each checked exactly.

Every criterion yields one ``PASS``/``FAIL`` line, printed in the pytest
terminal summary, or run ``python tests/test_acceptance.py`` for just the
lines.

The sweeps come from ``verify_sweep`` (full tier up to n = 7, sequences
tier at n = 8); each criterion then demands status ``pass`` for the
invariants it names at every size it covers.
"""
from __future__ import annotations

import random
import sys
import time
from math import comb
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fishburn import bijections as bij  # noqa: E402
from fishburn import duality as dual  # noqa: E402
from fishburn.enumeration import gen_asc, gen_matrices, gen_perms  # noqa: E402
from fishburn.families import is_casc  # noqa: E402
from fishburn.isomorphism import poset_isomorphic  # noqa: E402
from fishburn.oracle import verify_sweep  # noqa: E402
from fishburn.patterns import is_rgf  # noqa: E402

import worked  # noqa: E402

MAX_N = 8
MAX_POSET_N = 7
FISHBURN = [1, 2, 5, 15, 53, 217, 1014, 5335]
CATALAN = [comb(2 * n, n) // (n + 1) for n in range(1, MAX_N + 1)]
RANDOM_SEQUENCES = 100_000
RANDOM_MAX_LEN = 12

LINES: list[str] = []  # collected for the pytest terminal summary

_sweeps: dict[int, object] = {}
_sweep_seconds: dict[int, float] = {}


def sweep(n: int):
    if n not in _sweeps:
        t = time.perf_counter()
        _sweeps[n] = verify_sweep(n, "full" if n <= MAX_POSET_N else "sequences")
        _sweep_seconds[n] = time.perf_counter() - t
    return _sweeps[n]


def invariant_failures(names: list[str], max_n: int) -> list[str]:
    """Names (with n) whose status is anything but ``pass``."""
    bad = []
    for n in range(1, max_n + 1):
        report = sweep(n)
        for name in names:
            r = report.result(name)
            if r.status != "pass":
                bad.append(f"{name}@n={n}: {r.status} {r.counterexample!r}")
    return bad


def emit(k: int, title: str, problems: list[str]) -> str:
    status = "PASS" if not problems else "FAIL"
    line = f"{status} criterion {k}: {title}"
    if problems:
        line += " -- " + "; ".join(problems[:3])
    LINES.append(line)
    return line


def check(k: int, title: str, problems: list[str]) -> None:
    emit(k, title, problems)
    assert not problems, problems


# ---------------------------------------------------------------------------

def criterion_1() -> list[str]:
    t = time.perf_counter()
    problems = []
    P = worked.poset()
    pairs = {
        "asc->matrix": bij.asc_to_matrix(worked.ASC) == worked.MATRIX,
        "matrix->asc": bij.matrix_to_asc(worked.MATRIX) == worked.ASC,
        "asc->perm": bij.asc_to_perm(worked.ASC) == worked.PERM,
        "perm->asc": bij.perm_to_asc(worked.PERM) == worked.ASC,
        "asc->poset": poset_isomorphic(bij.asc_to_poset(worked.ASC), P),
        "poset->asc": bij.poset_to_asc(P) == worked.ASC,
        "poset->matrix": bij.poset_to_matrix(P) == worked.MATRIX,
        "matrix->poset": poset_isomorphic(bij.matrix_to_poset(worked.MATRIX), P),
        "poset->perm": bij.poset_to_perm(P) == worked.PERM,
        "perm->poset": poset_isomorphic(bij.perm_to_poset(worked.PERM), P),
        "matrix->perm": bij.matrix_to_perm(worked.MATRIX) == worked.PERM,
        "perm->matrix": bij.perm_to_matrix(worked.PERM) == worked.MATRIX,
    }
    problems += [name for name, ok in pairs.items() if not ok]
    trace = bij.BijectionTrace()
    bij.asc_to_matrix(worked.ASC, trace)
    if [s.snapshot for s in trace.steps] != worked.BUILD_STEPS:
        problems.append("intermediate matrices")
    if dual.asc_dual(worked.SMALL_ASC) != worked.SMALL_DUAL:
        problems.append("small dual")
    if dual.views(worked.PAN_INPUT) != worked.PAN_VIEWS or dual.panorama(worked.PAN_INPUT) != worked.PAN_OUTPUT:
        problems.append("panorama example")
    big = {
        "a->M": bij.asc_to_matrix(worked.BIG_ASC) == worked.BIG_MATRIX,
        "flip": dual.matrix_flip(worked.BIG_MATRIX) == worked.BIG_FLIP,
        "a*": dual.asc_dual(worked.BIG_ASC) == worked.BIG_DUAL,
        "a* via flip": bij.matrix_to_asc(worked.BIG_FLIP) == worked.BIG_DUAL,
        "pi": bij.asc_to_perm(worked.BIG_ASC) == worked.BIG_PERM,
        "pi direct": bij.rasc_to_perm_direct(worked.BIG_ASC) == worked.BIG_PERM,
        "pi*": dual.perm_dual(worked.BIG_PERM) == worked.BIG_PERM_DUAL,
        "pi* via a*": bij.asc_to_perm(worked.BIG_DUAL) == worked.BIG_PERM_DUAL,
    }
    problems += [f"14-element {name}" for name, ok in big.items() if not ok]
    elapsed = time.perf_counter() - t
    if elapsed >= 1.0:
        problems.append(f"took {elapsed:.2f}s")
    return problems


def criterion_2() -> list[str]:
    problems = []
    t = time.perf_counter()
    for n in range(1, MAX_N + 1):
        sizes = (
            sum(1 for _ in gen_asc(n)),
            sum(1 for _ in gen_matrices(n)),
            sum(1 for _ in gen_perms(n)),
        )
        if set(sizes) != {FISHBURN[n - 1]}:
            problems.append(f"n={n} sizes {sizes}")
    problems += invariant_failures(
        [
            "bij.asc_matrix_roundtrip",
            "bij.matrix_asc_roundtrip",
            "bij.asc_matrix_bijective",
            "bij.asc_perm_roundtrip",
            "bij.perm_asc_roundtrip",
            "bij.asc_perm_bijective",
            "enum.family_counts_agree",
        ],
        MAX_N,
    )
    problems += invariant_failures(
        [
            "bij.matrix_poset_roundtrip",
            "bij.poset_matrix_roundtrip",
            "bij.asc_poset_roundtrip",
            "bij.poset_asc_roundtrip",
            "bij.asc_poset_bijective",
            "enum.poset_count_agrees",
        ],
        MAX_POSET_N,
    )
    elapsed = time.perf_counter() - t + sum(_sweep_seconds.values())
    if elapsed >= 60:
        problems.append(f"took {elapsed:.1f}s")
    return problems


def criterion_3() -> list[str]:
    return invariant_failures(["bij.commutativity"], MAX_POSET_N)


def criterion_4() -> list[str]:
    return invariant_failures(["fam.R_matrix_image", "fam.R_perm_image"], MAX_N) + invariant_failures(
        ["fam.R_poset_image"], MAX_POSET_N
    )


def criterion_5() -> list[str]:
    problems = []
    for n in range(1, MAX_N + 1):
        c = sum(1 for a in gen_asc(n) if is_casc(a))
        if c != CATALAN[n - 1]:
            problems.append(f"|CAsc_{n}| = {c}, expected {CATALAN[n - 1]}")
    problems += invariant_failures(["fam.C_perm_image", "enum.catalan_count"], MAX_N)
    problems += invariant_failures(["fam.C_poset_image", "fam.C_matrix_image"], MAX_POSET_N)
    return problems


def criterion_6() -> list[str]:
    return invariant_failures(["dual.flip_transport"], MAX_POSET_N) + invariant_failures(
        ["dual.asc_dual_forms", "dual.asc_dual_involution", "dual.perm_dual_transport"], MAX_N
    )


def criterion_7_random() -> list[str]:
    rng = random.Random(20240601)
    for _ in range(RANDOM_SEQUENCES):
        length = rng.randint(0, RANDOM_MAX_LEN)
        s = [rng.randint(-RANDOM_MAX_LEN, RANDOM_MAX_LEN) for _ in range(length)]
        if not is_rgf(dual.panorama(s)):
            return [f"pan({s}) is not an RGF"]
    return []


def criterion_7_rgf() -> list[str]:
    return invariant_failures(["dual.panorama_of_rgf_in_rasc"], MAX_N)


def criterion_7_squared() -> list[str]:
    return invariant_failures(["dual.panorama_squared"], MAX_N)


def criterion_8() -> list[str]:
    return invariant_failures(["fam.diagonal_zero_criterion", "pat.catalan_equivalences"], MAX_N) + (
        invariant_failures(["fam.semiorder_agreement"], MAX_POSET_N)
    )


TITLES = {
    1: "worked examples reproduce exactly",
    2: "family sizes 1..5335 and round trips (n<=8, posets n<=7)",
    3: "poset_to_matrix = asc_to_matrix o poset_to_asc (n<=7)",
    4: "restricted images (n<=8, posets n<=7)",
    5: "Catalan counts and images",
    6: "duality suite",
    7: "panorama properties",
    8: "diagonal-zero criterion, four-way equivalence, semiorders",
}


# ---------------------------------------------------------------------------

def test_criterion_1():
    check(1, TITLES[1], criterion_1())


def test_criterion_2():
    check(2, TITLES[2], criterion_2())


def test_criterion_3():
    check(3, TITLES[3], criterion_3())


def test_criterion_4():
    check(4, TITLES[4], criterion_4())


def test_criterion_5():
    check(5, TITLES[5], criterion_5())


def test_criterion_6():
    check(6, TITLES[6], criterion_6())


def test_criterion_7_panorama_is_rgf():
    problems = criterion_7_random()
    assert not problems, problems


def test_criterion_7_double_panorama():
    problems = criterion_7_squared()
    assert not problems, problems


@pytest.mark.xfail(
    strict=True,
    reason="pan(RGF) is not always self-modified: (0,1,0,2,0,1,2) -> (0,0,1,1,2,1,2); "
    "see the decisions ledger",
)
def test_criterion_7():
    check(7, TITLES[7], criterion_7_random() + criterion_7_rgf() + criterion_7_squared())


def test_criterion_8():
    check(8, TITLES[8], criterion_8())


def main() -> int:
    checks = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, lambda: criterion_7_random() + criterion_7_rgf() + criterion_7_squared()),
        (8, criterion_8),
    ]
    failed = 0
    for k, fn in checks:
        problems = fn()
        print(emit(k, TITLES[k], problems))
        failed += bool(problems)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
