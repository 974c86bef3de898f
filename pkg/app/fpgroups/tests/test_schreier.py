import random

import pytest

from core.exceptions import MembershipError
from exactalg.abelian import FgAbGroup
from fpgroups.abelianization import abelianization_fp, tf_rank
from fpgroups.coset_table import todd_coxeter
from fpgroups.presentation import parse_presentation
from fpgroups.schreier import (
    free_rank_nielsen_schreier,
    reidemeister_schreier,
    rewrite_in_subgroup,
    schreier_transversal,
)
from fpgroups.words import free_reduce

S3 = parse_presentation("< a, b | a^3, b^2, (a*b)^2 >")
F2 = parse_presentation("< a, b | >")
F3 = parse_presentation("< a, b, c | >")
KLEIN = parse_presentation("< a, b | b*a*b^-1*a >")
Z2 = parse_presentation("< a, b | a*b*a^-1*b^-1 >")


def table_for(group, *texts, **kwargs):
    return todd_coxeter(group, [group.parse_word(t) for t in texts], **kwargs)


class TestAbelianization:
    def test_free_group(self):
        assert abelianization_fp(F2).group == FgAbGroup.free(2)

    def test_klein_bottle(self):
        ab = abelianization_fp(KLEIN)

        assert ab.group == FgAbGroup((2,), 1)
        assert ab.group.element_order(ab.generator_image(0)) == 2

    def test_s3(self):
        assert abelianization_fp(S3).group == FgAbGroup((2,))

    def test_tietze_equivalent_presentations_agree(self):
        other = parse_presentation("< a, b | a^3, b^2, b*a*b^-1*a >")

        assert abelianization_fp(other).group == abelianization_fp(S3).group

    @pytest.mark.parametrize("group, rank", [(F2, 2), (KLEIN, 1), (Z2, 2), (S3, 0)])
    def test_tf_rank(self, group, rank):
        assert tf_rank(group) == rank


class TestReidemeisterSchreier:
    def test_index_one_keeps_the_group(self):
        presentation = reidemeister_schreier(table_for(S3, "a", "b"))

        assert presentation.group.ngens == 2
        assert abelianization_fp(presentation.group).group == FgAbGroup((2,))

    @pytest.mark.parametrize(
        "group, generators, rank, index",
        [
            (F2, ("a", "b*a*b^-1", "b^2"), 2, 2),
            (F2, ("a", "b*a*b^-1", "b^2*a*b^-2", "b^3"), 2, 3),
            (F3, ("a", "b", "c*a*c^-1", "c*b*c^-1", "c^2"), 3, 2),
        ],
    )
    def test_nielsen_schreier_rank(self, group, generators, rank, index):
        presentation = reidemeister_schreier(table_for(group, *generators))

        assert tf_rank(presentation.group) == free_rank_nielsen_schreier(rank, index)
        assert presentation.group.ngens == free_rank_nielsen_schreier(rank, index)

    def test_cyclic_subgroup_of_s3(self):
        presentation = reidemeister_schreier(table_for(S3, "a"))

        assert abelianization_fp(presentation.group).group == FgAbGroup((3,))

    def test_relator_count(self):
        table = table_for(S3, "a")

        assert len(reidemeister_schreier(table).group.relators) == table.size * 3

    def test_schreier_words_lie_in_subgroup(self):
        table = table_for(KLEIN, "a", "b^2")
        presentation = reidemeister_schreier(table)

        for word in presentation.schreier_words:
            assert word
            assert table.contains(word)


class TestRewrite:
    def test_empty_word(self):
        assert rewrite_in_subgroup(table_for(F2, "a", "b*a*b^-1", "b^2"), ()) == ()

    def test_schreier_generator_round_trip(self):
        table = table_for(S3, "a")
        presentation = reidemeister_schreier(table)

        for k, word in enumerate(presentation.schreier_words, start=1):
            assert rewrite_in_subgroup(table, word) == (k,)

    def test_square_of_coset_representative(self):
        table = table_for(F2, "a", "b*a*b^-1", "b^2")
        transversal = schreier_transversal(table)
        b = table.act(0, 2)

        assert transversal.representatives[b] == (2,)
        assert rewrite_in_subgroup(table, (2, 2)) == (transversal.letter(b, 2),)

    def test_non_member(self):
        with pytest.raises(MembershipError):
            rewrite_in_subgroup(table_for(F2, "a", "b*a*b^-1", "b^2"), (2,))

    @pytest.mark.parametrize("seed", range(20))
    def test_evaluation_reproduces_the_word(self, seed):
        rng = random.Random(seed)
        table = table_for(F2, "a", "b*a*b^-1", "b^2*a*b^-2", "b^3")
        presentation = reidemeister_schreier(table)
        word = tuple(rng.choice((1, -1, 2, -2)) for _ in range(rng.randint(0, 12)))
        while not table.contains(word):
            word += (2,)

        assert presentation.evaluate(rewrite_in_subgroup(table, word)) == free_reduce(word)
