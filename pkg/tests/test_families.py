import pytest

from fishburn import families as fam
from fishburn.core import IntervalOrderPoset, Poset, antichain_poset, chain_poset
from fishburn.isomorphism import N_POSET, THREE_PLUS_ONE, TWO_PLUS_TWO

import worked


class TestRestricted:
    @pytest.mark.parametrize(
        "a, expected",
        [((0, 1, 0, 2), True), ((0, 1, 0, 1), False), ((0,) * 6, True), (worked.BIG_ASC, True)],
    )
    def test_rasc(self, a, expected):
        assert fam.is_rasc(a) is expected

    @pytest.mark.parametrize(
        "M, expected",
        [(worked.MATRIX, False), (worked.SMALL_MATRIX, True), (((1,),), True)],
    )
    def test_rmatrix(self, M, expected):
        assert fam.is_rmatrix(M) is expected

    def test_rposet(self):
        assert not fam.is_rposet(worked.poset())
        assert fam.is_rposet(chain_poset(5))
        assert fam.is_rposet(antichain_poset(4))

    def test_longest_chain(self):
        assert fam.longest_chain(worked.poset()) == 3
        assert fam.longest_chain(chain_poset(5)) == 5
        assert fam.longest_chain(antichain_poset(3)) == 1

    @pytest.mark.parametrize(
        "perm, expected", [((3, 1, 5, 2, 4), True), ((3, 1, 4, 2), False), ((1, 2, 3), True)]
    )
    def test_rperm(self, perm, expected):
        assert fam.is_rperm(perm) is expected


class TestCatalan:
    @pytest.mark.parametrize(
        "a, expected",
        [((0, 1, 0, 1), False), ((0, 1, 0, 2, 1), False), ((0, 1, 2, 2, 0), True)],
    )
    def test_casc(self, a, expected):
        assert fam.is_casc(a) is expected

    @pytest.mark.parametrize(
        "M, expected",
        [
            (((1, 1), (0, 1)), True),
            (((1, 0, 1), (0, 1, 0), (0, 0, 1)), True),
            (((1, 1, 0), (0, 1, 1), (0, 0, 1)), False),
        ],
    )
    def test_se_free(self, M, expected):
        assert fam.is_se_free(M) is expected

    def test_se_pair_reported_one_based(self):
        assert fam.se_pairs(((1, 1, 0), (0, 1, 1), (0, 0, 1))) == [((1, 2), (2, 3))]

    def test_series_parallel(self):
        assert not fam.is_series_parallel(worked.poset())
        assert fam.is_series_parallel(chain_poset(4))
        assert fam.is_series_parallel(antichain_poset(4))
        assert not fam.is_series_parallel(N_POSET)


class TestSemiorders:
    def test_poset(self):
        assert not fam.is_semiorder_poset(worked.poset())
        assert fam.is_semiorder_poset(chain_poset(4))
        assert not fam.is_semiorder_poset(TWO_PLUS_TWO)
        assert not fam.is_semiorder_poset(THREE_PLUS_ONE)

    def test_matrix(self):
        assert not fam.is_semiorder_matrix(worked.MATRIX)
        assert fam.is_semiorder_matrix(((1,),))
        assert fam.is_semiorder_matrix(((1, 0, 0), (0, 1, 0), (0, 0, 1)))


class TestClassify:
    def test_asc(self):
        assert fam.classify_asc((0, 1, 0, 1)) == fam.FamilyTag("Asc", True, False, False)
        assert fam.classify_asc((0, 2)) == fam.FamilyTag("Asc", False, False, False)

    def test_poset_outside_family(self):
        assert not fam.classify_poset(Poset(4, [(0, 1), (2, 3)])).in_classical

    def test_perm(self):
        assert fam.classify_perm((1, 2, 3)) == fam.FamilyTag("Perms", True, True, True)

    def test_matrix(self):
        assert fam.classify_matrix(worked.MATRIX) == fam.FamilyTag("Matrices", True, False, False)

    def test_nesting_enforced(self):
        with pytest.raises(fam.InconsistentCriteria):
            fam.FamilyTag("Asc", True, False, True)
