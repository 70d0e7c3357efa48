import pytest

from fishburn.core import (
    AscentSequence,
    FishburnMatrix,
    IntervalOrderPoset,
    MalformedMatrix,
    NegativeEntry,
    NotAPermutation,
    NotAPoset,
    NotAscentSequence,
    NotInAvoidanceClass,
    NotTwoPlusTwoFree,
    NotUpperTriangular,
    ParseError,
    PatternPermutation,
    Poset,
    ZeroColumn,
    ZeroRow,
    active_sites,
    antichain_poset,
    asc_count,
    canonical_labelling,
    chain_poset,
    format_matrix,
    format_poset,
    format_seq,
    is_ascent_sequence,
    parse_asc,
    parse_matrix,
    parse_perm,
    parse_poset,
    poset_structure,
    render_active_sites,
    validate_asc,
    validate_matrix,
)
from fishburn.isomorphism import poset_isomorphic

import worked
from worked import p


class TestAscentSequences:
    def test_valid_example(self):
        assert validate_asc((0, 1, 0, 1, 3)) == (0, 1, 0, 1, 3)

    def test_violation_position(self):
        with pytest.raises(NotAscentSequence) as info:
            validate_asc((0, 1, 0, 2, 4))
        assert info.value.position == 5

    def test_empty(self):
        assert validate_asc(()) == ()

    def test_must_start_at_zero(self):
        with pytest.raises(NotAscentSequence) as info:
            AscentSequence((1, 0))
        assert info.value.position == 1

    @pytest.mark.parametrize(
        "entries, expected",
        [((0,), 0), ((0, 1, 0, 1, 3), 3), ((0, 0, 1, 2, 0, 1), 3), ((), 0)],
    )
    def test_asc_count(self, entries, expected):
        assert asc_count(entries) == expected

    def test_prefix_and_ascents(self):
        a = AscentSequence(worked.ASC)
        assert a.prefix(3) == (0, 0, 1)
        assert isinstance(a.prefix(3), AscentSequence)
        assert a.ascents == 3

    def test_negative_entries_rejected(self):
        assert not is_ascent_sequence((0, -1))


class TestMatrices:
    def test_worked_matrix(self):
        M = validate_matrix(worked.MATRIX)
        assert M.weight == 6
        assert M.dim == 4
        assert M.diagonal == (2, 0, 1, 1)

    def test_single_cell(self):
        assert validate_matrix([[1]]).weight == 1

    def test_zero_column(self):
        with pytest.raises(ZeroColumn) as info:
            validate_matrix([[0, 1], [0, 1]])
        assert info.value.j == 1

    def test_zero_row(self):
        with pytest.raises(ZeroRow) as info:
            validate_matrix([[1, 1], [0, 0]])
        assert info.value.i == 2

    def test_lower_entry(self):
        with pytest.raises(NotUpperTriangular):
            validate_matrix([[1, 0], [1, 1]])

    def test_negative(self):
        with pytest.raises(NegativeEntry):
            validate_matrix([[1, -1], [0, 1]])

    def test_not_square(self):
        with pytest.raises(MalformedMatrix):
            validate_matrix([[1, 0]])

    def test_empty_matrix(self):
        M = FishburnMatrix(())
        assert M.dim == 0 and M.weight == 0

    def test_mindex_and_rowsum(self):
        M = FishburnMatrix(worked.SMALL_MATRIX)
        assert M.mindex == 1
        assert M.rowsum(1) == 3
        assert FishburnMatrix(((1, 0), (0, 1))).mindex == 2


class TestPosets:
    def test_structure_of_worked_poset(self):
        st = poset_structure(worked.poset())
        assert st.downsets == (p(), p(1, 2), p(1, 2, 5), p(1, 2, 3, 5))
        assert st.levels == (p(1, 2, 5), p(6), p(3), p(4))
        assert st.blocks == (p(1, 2), p(5), p(3), p(4, 6))
        assert st.ell == 3
        assert st.ell_star == 1

    def test_antichain_structure(self):
        st = poset_structure(antichain_poset(4))
        assert st.downsets == (frozenset(),)
        assert len(st.levels) == 1
        assert st.ell == 0 and st.ell_star == 0

    def test_transitive_closure(self):
        P = parse_poset("n=3;1<2,2<3")
        assert P.less(0, 2)

    def test_cycle_rejected(self):
        with pytest.raises(NotAPoset):
            Poset(2, [(0, 1), (1, 0)])

    def test_two_plus_two_rejected(self):
        with pytest.raises(NotTwoPlusTwoFree):
            IntervalOrderPoset(4, [(0, 1), (2, 3)])
        assert not Poset(4, [(0, 1), (2, 3)]).is_two_plus_two_free()

    def test_unlabelled_equality(self):
        assert chain_poset(3) == IntervalOrderPoset(3, [(2, 1), (1, 0)])
        assert chain_poset(2) != antichain_poset(2)

    def test_empty_poset(self):
        assert poset_structure(IntervalOrderPoset(0)).ell == -1

    def test_canonical_labelling_is_isomorphic(self):
        P = worked.poset()
        Q = canonical_labelling(P)
        assert poset_isomorphic(P, Q)
        assert format_poset(Q) == format_poset(canonical_labelling(P.relabel([5, 4, 3, 2, 1, 0])))


class TestPermutations:
    def test_active_sites_worked(self):
        assert render_active_sites(worked.PERM) == "_0 5 2 1 _1 6 _2 3 _3 4 _4"

    def test_active_sites_single(self):
        assert render_active_sites((1,)) == "_0 1 _1"

    def test_active_sites_five(self):
        assert render_active_sites((5, 2, 1, 3, 4)) == "_0 5 2 1 _1 3 _2 4 _3"

    def test_site_positions(self):
        assert active_sites(worked.PERM) == [0, 3, 4, 5, 6]

    def test_not_a_permutation(self):
        with pytest.raises(NotAPermutation):
            PatternPermutation((1, 1))

    def test_pattern_rejected(self):
        with pytest.raises(NotInAvoidanceClass):
            PatternPermutation((3, 2, 5, 4, 1))


class TestTextFormats:
    def test_round_trips(self):
        assert parse_asc(format_seq(worked.ASC)) == worked.ASC
        assert parse_matrix(format_matrix(worked.MATRIX)) == worked.MATRIX
        assert parse_perm(format_seq(worked.PERM)) == worked.PERM
        P = worked.poset()
        assert poset_isomorphic(parse_poset(format_poset(P)), P)

    def test_matrix_text(self):
        assert format_matrix(worked.MATRIX) == "2,1,0,0;0,0,0,1;0,0,1,0;0,0,0,1"

    def test_covers_only_output(self):
        assert format_poset(parse_poset("n=3;1<2,2<3,1<3")) == "n=3;1<2,2<3"

    @pytest.mark.parametrize("text", ["6;1<2", "n=x;", "n=2;1-2", "n=2;1<3", "n=2;a<b"])
    def test_bad_poset_text(self, text):
        with pytest.raises(ParseError):
            parse_poset(text)

    def test_bad_integers(self):
        with pytest.raises(ParseError):
            parse_asc("0,a")
