from fractions import Fraction

import pytest

from core.exceptions import PreconditionError
from core.verdicts import Verdict
from cyccoh.lattices import LatticeDecomposition
from exactalg.abelian import FgAbGroup
from fpgroups.presentation import parse_presentation
from permgroups import standard
from permgroups.commutators import commutator
from permgroups.permutation import Permutation
from permgroups.subgroups import commutator_subgroup
from transfer.pairs import FpPair, PermPair
from transfer.theorems import (
    OrderReport,
    gtf_report,
    transfer_report,
    verify_suzuki,
    verify_thm_A,
    verify_thm_B,
    verify_thm_C,
    verify_thm_D,
)

F2 = parse_presentation("< a, b | >")
F3 = parse_presentation("< a, b, c | >")
KLEIN = parse_presentation("< a, b | b*a*b^-1*a >")
Z2 = parse_presentation("< a, b | a*b*a^-1*b^-1 >")
S3_FP = parse_presentation("< a, b | a^3, b^2, (a*b)^2 >")

F2_INDEX_3 = ("a", "b*a*b^-1", "b^2*a*b^-2", "b^3")


def fp_pair(group, *words):
    return FpPair(group, [group.parse_word(w) for w in words], label=str(group))


def rotations(n):
    group = standard.dihedral(n)
    return PermPair(group, group.subgroup([group.generators[0]]), f"D{n}/C{n}")


class TestTransferReport:
    def test_s3_over_a3(self, s3_a3):
        report = transfer_report(s3_a3)

        assert (report.tk_order, report.tc_order, report.index) == (2, 1, 2)
        assert report.ratio == 2
        assert report.hs_multiplier == 1

    def test_exact_rationals(self):
        report = transfer_report(fp_pair(Z2, "a", "b^2"))

        assert report.ratio == Fraction(1, 2)
        assert report.hs_multiplier == Fraction(1, 2)


class TestKernelOfInclusion:
    def test_s3_over_a3(self, s3_a3):
        report = verify_thm_A(s3_a3)

        assert report.kernel == report.augmentation_image == FgAbGroup((3,))
        assert report.verdict == Verdict.PASS

    def test_quaternion(self, q8_pair):
        report = verify_thm_A(q8_pair)

        assert report.kernel == FgAbGroup((2,))
        assert report.equal
        assert report.c1_order == 1

    def test_whole_group(self, s3):
        assert verify_thm_A(PermPair(s3, s3.whole())).verdict == Verdict.PASS

    def test_every_generator_of_the_quotient(self, s3_a3):
        for s in ("(0 1)", "(1 2)", "(0 2)"):
            assert verify_thm_A(s3_a3, Permutation.parse(s, 3)).verdict == Verdict.PASS

    def test_generator_must_generate(self, s3_a3):
        with pytest.raises(PreconditionError):
            verify_thm_A(s3_a3, Permutation.parse("(0 1 2)", 3))

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_dihedral_rotations(self, n):
        assert verify_thm_A(rotations(n)).verdict == Verdict.PASS

    def test_free_group_kernel(self, f2_kernel):
        report = verify_thm_A(f2_kernel)

        assert report.kernel == FgAbGroup.free(1)
        assert report.verdict == Verdict.PASS


class TestOrderIdentity:
    @pytest.mark.parametrize("pair", ["s3_a3", "q8_pair"])
    def test_worked_examples(self, pair, request):
        report = verify_thm_C(request.getfixturevalue(pair))

        assert (report.tk_order, report.index, report.tc_order) == (2, 2, 1)
        assert report.euler_is_one
        assert report.suzuki_divides
        assert report.verdict == Verdict.PASS

    def test_whole_group(self, q8):
        report = verify_thm_C(PermPair(q8, q8.whole()))

        assert (report.tk_order, report.tc_order) == (1, 1)
        assert report.verdict == Verdict.PASS

    @pytest.mark.parametrize("n", [3, 4, 5, 6, 8])
    def test_dihedral_rotations(self, n):
        assert verify_thm_C(rotations(n)).verdict == Verdict.PASS

    def test_cyclic_quotients_of_heisenberg(self):
        group = standard.heisenberg(3)
        x, y = group.generators
        centre = commutator(x, y)
        for generators in ([y, centre], [x, centre], [x * y, centre]):
            pair = PermPair(group, group.subgroup(generators))

            assert pair.index == 3
            assert verify_thm_C(pair).verdict == Verdict.PASS

    def test_infinite_group_is_out_of_scope(self, f2_kernel):
        assert verify_thm_C(f2_kernel).verdict == Verdict.HYPOTHESIS_NOT_MET

    def test_non_cyclic_quotient(self, q8):
        centre = q8.subgroup([q8.generators[0] ** 2])

        with pytest.raises(PreconditionError):
            verify_thm_C(PermPair(q8, centre))


    def test_divisibility_enters_the_verdict(self):
        report = OrderReport(
            tk_order=2, tc_order=1, index=2, euler_is_one=True, suzuki_divides=False
        )

        assert report.holds
        assert report.verdict == Verdict.FAIL


class TestIndexDividesTransferKernel:
    def test_quaternion_over_its_centre(self, q8):
        report = verify_suzuki(PermPair(q8, q8.subgroup([q8.generators[0] ** 2])))

        assert (report.tk_order, report.index) == (4, 4)
        assert not report.cyclic_quotient
        assert report.verdict == Verdict.PASS

    def test_abelian_group_over_trivial_subgroup(self):
        group = standard.product_of_cyclics(2, 4)
        report = verify_suzuki(PermPair(group, group.trivial_subgroup()))

        assert (report.tk_order, report.index) == (8, 8)
        assert report.divides

    def test_heisenberg_over_derived_subgroup(self):
        group = standard.heisenberg(3)
        report = verify_suzuki(PermPair(group, commutator_subgroup(group)))

        assert (report.tk_order, report.index) == (9, 9)
        assert report.verdict == Verdict.PASS

    def test_cyclic_quotient(self, s3_a3):
        report = verify_suzuki(s3_a3)

        assert report.cyclic_quotient
        assert (report.tk_order, report.index) == (2, 2)

    def test_non_abelian_quotient(self, s3):
        with pytest.raises(PreconditionError):
            verify_suzuki(PermPair(s3, s3.trivial_subgroup()))

    def test_infinite_group(self, f2_kernel):
        with pytest.raises(PreconditionError):
            verify_suzuki(f2_kernel)

class TestFreeRankFormula:
    @pytest.mark.parametrize(
        "group, words, tf_g, tf_u, ratio",
        [
            (F2, ("a", "b*a*b^-1", "b^2"), 2, 3, 1),
            (F2, F2_INDEX_3, 2, 4, 1),
            (F3, ("a", "b", "c*a*c^-1", "c*b*c^-1", "c^2"), 3, 5, 1),
            (KLEIN, ("a", "b^2"), 1, 2, 2),
            (Z2, ("a", "b^2"), 2, 2, Fraction(1, 2)),
        ],
    )
    def test_classic_pairs(self, group, words, tf_g, tf_u, ratio):
        report = verify_thm_D(fp_pair(group, *words))

        assert (report.tf_g, report.tf_u, report.ratio) == (tf_g, tf_u, ratio)
        assert report.formula_holds
        assert report.herbrand == report.p / ratio
        assert report.verdict == Verdict.PASS

    def test_non_normal_subgroup(self):
        report = verify_thm_D(fp_pair(S3_FP, "b"))

        assert report.p == 3
        assert report.verdict == Verdict.HYPOTHESIS_NOT_MET

    def test_index_must_be_prime(self):
        words = ("a", "b*a*b^-1", "b^2*a*b^-2", "b^3*a*b^-3", "b^4")

        with pytest.raises(PreconditionError):
            verify_thm_D(fp_pair(F2, *words))


class TestPermutationModules:
    def test_free_group_index_two(self, f2_kernel):
        report = verify_thm_B(f2_kernel)

        assert report.hypothesis_holds
        assert report.decomposition == LatticeDecomposition(1, 0, 1, 2)
        assert report.verdict == Verdict.PASS

    def test_free_group_index_three(self):
        report = verify_thm_B(fp_pair(F2, *F2_INDEX_3))

        assert report.decomposition == LatticeDecomposition(1, 0, 1, 3)
        assert all(group.is_trivial for group in report.section_hm1)
        assert report.verdict == Verdict.PASS

    def test_whole_free_group_is_vacuous(self):
        report = verify_thm_B(fp_pair(F2, "a", "b"))

        assert report.decomposition is None
        assert report.verdict == Verdict.PASS

    def test_klein_bottle_fails_the_hypothesis(self):
        report = verify_thm_B(fp_pair(KLEIN, "a", "b^2"))

        assert not report.hypothesis_holds
        assert report.section_hm1 == ()
        assert report.verdict == Verdict.HYPOTHESIS_NOT_MET


class TestGlobalRank:
    def test_sections(self, s3_a3):
        report = gtf_report(
            [s3_a3, fp_pair(KLEIN, "a", "b^2"), fp_pair(parse_presentation("< a | >"), "a^2")]
        )

        assert [s.value for s in report.sections] == [0, 0, 1]
        assert [s.tk_tc_trivial for s in report.sections] == [False, False, True]
        assert not report.agree
        assert report.verdict == Verdict.PASS

    def test_free_group_sections_agree(self, f2_kernel):
        report = gtf_report([f2_kernel, fp_pair(F2, *F2_INDEX_3)])

        assert report.agree
        assert {s.value for s in report.sections} == {1}

    def test_prime_index_required(self, q8):
        with pytest.raises(PreconditionError):
            gtf_report([PermPair(q8, q8.trivial_subgroup())])
