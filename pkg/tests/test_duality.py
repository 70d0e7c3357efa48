import pytest

from fishburn import bijections as bij
from fishburn import duality as dual
from fishburn.core import NotRAsc, NotRPerm, antichain_poset, chain_poset
from fishburn.isomorphism import poset_isomorphic

import worked


class TestPosetDual:
    def test_self_dual(self):
        assert poset_isomorphic(dual.poset_dual(chain_poset(4)), chain_poset(4))
        assert poset_isomorphic(dual.poset_dual(antichain_poset(3)), antichain_poset(3))

    def test_matrix_transport(self):
        P = worked.poset()
        assert bij.poset_to_matrix(dual.poset_dual(P)) == dual.matrix_flip(worked.MATRIX)


class TestFlip:
    @pytest.mark.parametrize(
        "M, flipped",
        [
            (worked.SMALL_MATRIX, ((1, 0, 1), (0, 1, 0), (0, 0, 2))),
            (((1,),), ((1,),)),
            (worked.BIG_MATRIX, worked.BIG_FLIP),
        ],
    )
    def test_examples(self, M, flipped):
        assert dual.matrix_flip(M) == flipped


class TestAscDual:
    @pytest.mark.parametrize(
        "a, expected",
        [(worked.SMALL_ASC, worked.SMALL_DUAL), ((0,), (0,)), (worked.BIG_ASC, worked.BIG_DUAL)],
    )
    def test_examples(self, a, expected):
        assert dual.asc_dual(a) == expected

    def test_refuses_general_sequences(self):
        with pytest.raises(NotRAsc):
            dual.asc_dual((0, 1, 0, 1))


class TestViewsAndPanorama:
    def test_views(self):
        assert dual.views(worked.PAN_INPUT) == worked.PAN_VIEWS
        assert dual.views((5, 4, 3, 1)) == (0, 0, 0, 0)
        assert dual.views((0, 1)) == (1, 0)

    def test_panorama(self):
        assert dual.panorama(worked.PAN_INPUT) == worked.PAN_OUTPUT
        assert dual.panorama((7,) * 5) == (0,) * 5
        assert dual.panorama(worked.SMALL_ASC) == worked.SMALL_DUAL

    def test_real_valued_input(self):
        assert dual.panorama((0.5, -1.0, 2.25)) == dual.panorama((1, 0, 2))

    def test_panorama_of_rgf_can_leave_the_restricted_family(self):
        # asserted in the literature without proof; smallest counterexample
        from fishburn.families import is_rasc
        from fishburn.patterns import is_rgf

        r = (0, 1, 0, 2, 0, 1, 2)
        assert is_rgf(r)
        assert dual.panorama(r) == (0, 0, 1, 1, 2, 1, 2)
        assert not is_rasc(dual.panorama(r))


class TestPermDual:
    def test_big_example(self):
        assert dual.perm_dual(worked.BIG_PERM) == worked.BIG_PERM_DUAL

    @pytest.mark.parametrize("perm", [(1,), (1, 2)])
    def test_small(self, perm):
        assert dual.perm_dual(perm) == perm

    def test_refuses_outside_restricted_family(self):
        with pytest.raises(NotRPerm):
            dual.perm_dual(worked.PERM)

    def test_helpers(self):
        assert dual.reverse((1, 3, 2)) == (2, 3, 1)
        assert dual.complement((1, 3, 2)) == (3, 1, 2)
        assert dual.inverse((2, 3, 1)) == (3, 1, 2)
