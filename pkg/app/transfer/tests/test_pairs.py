import random

import pytest

from core.exceptions import NormalityError
from exactalg.abelian import AbHom, FgAbGroup, hom_image
from fpgroups.presentation import parse_presentation
from fpgroups.words import concat
from permgroups import standard
from permgroups.permutation import Permutation
from transfer.kernels import composition_holds, transfer_cokernel, transfer_kernel
from transfer.pairs import FpPair, PermPair

S3_FP = parse_presentation("< a, b | a^3, b^2, (a*b)^2 >")
Q8_FP = parse_presentation("< i, j | i^4, i^2*j^-2, j*i*j^-1*i >")


def fp_pair(group, *words):
    return FpPair(group, [group.parse_word(w) for w in words])


def s4_a4():
    s4 = standard.symmetric(4)
    a4 = s4.subgroup(
        [Permutation.from_cycles([[0, 1, 2]], 4), Permutation.from_cycles([[1, 2, 3]], 4)]
    )
    return PermPair(s4, a4)


class TestTransferMap:
    def test_whole_group_gives_identity(self, s3):
        pair = PermPair(s3, s3.whole())

        assert pair.index == 1
        assert pair.transfer_map() == AbHom.identity(pair.ab_g)

    def test_s3_over_a3_is_zero(self, s3_a3):
        assert s3_a3.ab_g == FgAbGroup((2,))
        assert s3_a3.ab_u == FgAbGroup((3,))
        assert s3_a3.transfer_map().is_zero()

    def test_quaternion(self, q8, q8_pair):
        i, j = q8.generators

        assert q8_pair.ab_u == FgAbGroup((4,))
        assert q8_pair.transfer_of(j) == (2,)
        assert q8_pair.transfer_of(i) == (0,)

    @pytest.mark.parametrize("seed", range(5))
    def test_transversal_independence(self, seed, s3, a3, q8, q8_i):
        rng = random.Random(seed)
        for group, subgroup in ((s3, a3), (q8, q8_i), (s3, s3.trivial_subgroup())):
            fixed = PermPair(group, subgroup).transfer_map()

            assert PermPair(group, subgroup, rng=rng).transfer_map() == fixed

    @pytest.mark.parametrize("seed", range(5))
    def test_random_transversals(self, seed, s3_a3, q8_pair):
        rng = random.Random(seed)
        for pair in (s3_a3, q8_pair, s4_a4()):
            assert pair.random_transfer_map(rng) == pair.transfer_map()

    @pytest.mark.parametrize("seed", range(5))
    def test_fp_transversal_independence(self, seed, f2_kernel):
        rng = random.Random(seed)
        pairs = (f2_kernel, fp_pair(S3_FP, "a"), fp_pair(S3_FP, "b"), fp_pair(Q8_FP, "i"))
        for pair in pairs:
            assert pair.random_transfer_map(rng) == pair.transfer_map()

    def test_fp_representatives_stay_in_their_cosets(self, f2_kernel):
        representatives = f2_kernel.presentation.transversal.representatives
        word = f2_kernel.table.subgroup_words[1]
        shifted = [concat(word, r) for r in representatives]

        for x in (1, 2):
            assert f2_kernel.transfer_through(x, shifted) == f2_kernel.transfer_of_generator(x)

    def test_composition_law(self, s3_a3, q8_pair, f2_kernel):
        for pair in (s3_a3, q8_pair, f2_kernel, s4_a4(), fp_pair(S3_FP, "b")):
            assert composition_holds(pair)


class TestAbelianQuotient:
    def test_perm_pairs(self, s3, s3_a3, q8, q8_pair):
        assert s3_a3.has_abelian_quotient()
        assert q8_pair.has_abelian_quotient()
        assert PermPair(q8, q8.subgroup([q8.generators[0] ** 2])).has_abelian_quotient()
        assert not PermPair(s3, s3.trivial_subgroup()).has_abelian_quotient()

    def test_fp_pairs(self, f2_kernel):
        assert f2_kernel.has_abelian_quotient()
        assert fp_pair(S3_FP, "a").has_abelian_quotient()
        assert not fp_pair(S3_FP, "b").has_abelian_quotient()
        assert not fp_pair(S3_FP).has_abelian_quotient()
        assert fp_pair(Q8_FP, "i^2").has_abelian_quotient()


class TestInclusionMap:
    def test_s3_over_a3_is_zero(self, s3_a3):
        assert s3_a3.inclusion_map().is_zero()

    def test_free_group_kernel_has_full_rank(self, f2_kernel):
        inclusion = f2_kernel.inclusion_map()

        assert inclusion.domain == FgAbGroup.free(3)
        assert hom_image(inclusion)[0] == FgAbGroup.free(2)


class TestConjugation:
    def test_inversion_on_a3(self, s3_a3):
        sigma = s3_a3.conj_action(Permutation.parse("(0 1)", 3))

        assert sigma == AbHom.scalar(s3_a3.ab_u, -1)

    def test_inversion_on_quaternion_subgroup(self, q8, q8_pair):
        sigma = q8_pair.conj_action(q8.generators[1])

        assert sigma == AbHom.scalar(q8_pair.ab_u, -1)
        assert sigma.power(2) == AbHom.identity(q8_pair.ab_u)

    def test_central_element_acts_trivially(self, q8, q8_pair):
        i = q8.generators[0]

        assert q8_pair.conj_action(i * i) == AbHom.identity(q8_pair.ab_u)

    def test_non_normal_subgroup(self, s3):
        pair = PermPair(s3, s3.subgroup([Permutation.parse("(0 1)", 3)]))

        assert not pair.is_normal()
        with pytest.raises(NormalityError):
            pair.conj_action(Permutation.parse("(0 1 2)", 3))
        with pytest.raises(NormalityError):
            pair.invariant_actions()

    def test_non_normal_fp_subgroup(self):
        pair = fp_pair(S3_FP, "b")

        assert pair.index == 3
        assert not pair.is_normal()
        with pytest.raises(NormalityError):
            pair.conj_action(S3_FP.parse_word("a"))


class TestBackendsAgree:
    @staticmethod
    def assert_agree(left, right):
        assert (left.ab_g, left.ab_u) == (right.ab_g, right.ab_u)
        assert left.index == right.index
        assert transfer_kernel(left) == transfer_kernel(right)
        assert transfer_cokernel(left) == transfer_cokernel(right)
        assert left.transfer_map().is_zero() == right.transfer_map().is_zero()

    def test_s3(self, s3_a3):
        self.assert_agree(s3_a3, fp_pair(S3_FP, "a"))

    def test_quaternion(self, q8_pair):
        self.assert_agree(q8_pair, fp_pair(Q8_FP, "i"))
