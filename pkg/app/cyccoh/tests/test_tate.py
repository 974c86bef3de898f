import random
from fractions import Fraction

import pytest

from core.exceptions import PreconditionError
from cyccoh import modules
from cyccoh.modules import from_matrix
from cyccoh.tate import (
    ModuleSequence,
    exact_log,
    h1_vanishes,
    herbrand,
    norm_endo,
    tate_h0,
    tate_hm1,
    verify_herbrand_mult,
    verify_logh,
)
from exactalg.abelian import AbHom, FgAbGroup, direct_sum
from exactalg.matrix import IntMatrix, random_unimodular

Z3_INVERSION = modules.finite_cyclic(3, -1, 2)


def torsion_by_lattice():
    """``Z/3 + Z`` with sigma inverting the torsion and fixing the lattice."""
    return from_matrix(FgAbGroup((3,), 1), IntMatrix.diagonal([-1, 1]), 2)


def augmentation_sequence(p):
    """``0 -> Omega -> Z[C_p] -> Z -> 0``."""
    omega, regular, trivial = (
        modules.augmentation_ideal(p),
        modules.regular(p),
        modules.trivial_lattice(1, p),
    )
    f = AbHom.from_images(
        omega.group,
        regular.group,
        [[-1 if j == 0 else int(j == i) for j in range(p)] for i in range(1, p)],
    )
    g = AbHom.from_images(regular.group, trivial.group, [(1,)] * p)
    return ModuleSequence(omega, regular, trivial, f, g)


def split_sequence(a, c):
    maps = direct_sum([a.group, c.group])
    b = modules.direct_sum_modules([a, c])
    return ModuleSequence(a, b, c, maps.injections[0], maps.projections[1])


def twisted(sequence, rng):
    """The same sequence with the middle lattice in a random basis."""
    q, q_inv = random_unimodular(sequence.b.rank, rng)
    b = modules.conjugate_lattice(sequence.b, q, q_inv)
    f = AbHom(sequence.a.group, b.group, q @ sequence.f.matrix)
    g = AbHom(b.group, sequence.c.group, sequence.g.matrix @ q_inv)
    return ModuleSequence(sequence.a, b, sequence.c, f, g)


def random_lattice(p, rng):
    """A conjugated ``Z^r + Omega^s + Z[C_p]^t`` of rank 1 to 6, with ``(r, s)``."""
    while True:
        r, s, t = (rng.randint(0, 2) for _ in range(3))
        if 1 <= r + s * (p - 1) + t * p <= 6:
            break
    lattice = modules.diederichsen_lattice(r, s, t, p)
    q, q_inv = random_unimodular(lattice.rank, rng, steps=6)
    return modules.conjugate_lattice(lattice, q, q_inv), r, s


class TestNorm:
    def test_trivial_action(self):
        module = modules.trivial_lattice(1, 5)

        assert norm_endo(module) == AbHom.scalar(module.group, 5)

    def test_regular_module(self):
        assert norm_endo(modules.regular(2)).matrix == IntMatrix.from_rows([[1, 1], [1, 1]])

    def test_inversion_on_z3(self):
        assert norm_endo(Z3_INVERSION).is_zero()


class TestTateGroups:
    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_trivial_lattice(self, p):
        module = modules.trivial_lattice(1, p)

        assert tate_h0(module) == FgAbGroup((p,))
        assert tate_hm1(module).is_trivial

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_regular_module_is_cohomologically_trivial(self, p):
        module = modules.regular(p)

        assert tate_h0(module).is_trivial
        assert tate_hm1(module).is_trivial

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_augmentation_ideal(self, p):
        module = modules.augmentation_ideal(p)

        assert tate_h0(module).is_trivial
        assert tate_hm1(module) == FgAbGroup((p,))

    def test_generator_independence(self):
        module = modules.direct_sum_modules(
            [modules.augmentation_ideal(5), modules.trivial_lattice(2, 5)]
        )

        for k in (2, 3, 4):
            other = module.with_generator(k)
            assert tate_h0(other) == tate_h0(module)
            assert tate_hm1(other) == tate_hm1(module)


class TestHerbrand:
    def test_finite_module(self):
        assert herbrand(Z3_INVERSION) == 1
        assert herbrand(modules.finite_cyclic(4, 3, 2)) == 1

    def test_trivial_lattice(self):
        assert herbrand(modules.trivial_lattice(1, 3)) == 3

    def test_augmentation_ideal(self):
        assert herbrand(modules.augmentation_ideal(3)) == Fraction(1, 3)

    def test_h1_vanishing(self):
        assert h1_vanishes(modules.regular(3))
        assert not h1_vanishes(modules.augmentation_ideal(3))
        assert h1_vanishes(Z3_INVERSION)

    @pytest.mark.parametrize(
        "value, p, expected",
        [(1, 2, 0), (8, 2, 3), (Fraction(1, 9), 3, -2), (6, 2, None), (Fraction(2, 3), 3, None)],
    )
    def test_exact_log(self, value, p, expected):
        assert exact_log(value, p) == expected


class TestHerbrandMultiplicativity:
    def test_identity_onto_zero(self):
        module = modules.augmentation_ideal(3)
        zero = modules.trivial_lattice(0, 3)
        sequence = ModuleSequence(
            module,
            module,
            zero,
            module.identity,
            AbHom.zero(module.group, zero.group),
        )

        assert verify_herbrand_mult(sequence).holds

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_augmentation_sequence(self, p):
        report = verify_herbrand_mult(augmentation_sequence(p))

        assert report.holds
        assert (report.h_a, report.h_b, report.h_c) == (Fraction(1, p), 1, p)

    @pytest.mark.parametrize("p", [2, 3, 5])
    @pytest.mark.parametrize("seed", range(10))
    def test_twisted_augmentation_sequence(self, p, seed):
        report = verify_herbrand_mult(twisted(augmentation_sequence(p), random.Random(seed)))

        assert report.holds
        assert (report.h_a, report.h_b, report.h_c) == (Fraction(1, p), 1, p)

    @pytest.mark.parametrize("seed", range(200))
    def test_random_split_sequences(self, seed):
        rng = random.Random(seed)
        p = rng.choice((2, 3, 5))
        (a, r_a, s_a), (c, r_c, s_c) = random_lattice(p, rng), random_lattice(p, rng)

        report = verify_herbrand_mult(twisted(split_sequence(a, c), rng))

        assert report.holds
        assert report.h_a == Fraction(p) ** (r_a - s_a)
        assert report.h_c == Fraction(p) ** (r_c - s_c)

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_finite_sequence(self, p):
        """``0 -> Z/p -> Z/p^2 -> Z/p -> 0`` with ``sigma = 1 + p`` in the middle."""
        sub, middle, top = (
            modules.finite_cyclic(p, 1, p),
            modules.finite_cyclic(p * p, 1 + p, p),
            modules.finite_cyclic(p, 1, p),
        )
        f = AbHom.from_images(sub.group, middle.group, [(p,)])
        g = AbHom.from_images(middle.group, top.group, [(1,)])

        report = verify_herbrand_mult(ModuleSequence(sub, middle, top, f, g))

        assert report.holds
        assert report.h_a == report.h_b == report.h_c == 1

    def test_torsion_sequence(self):
        module = torsion_by_lattice()
        torsion, lattice = module.torsion_part(), module.lattice_part()
        f = AbHom.from_images(torsion.group, module.group, [(1, 0)])
        g = AbHom.from_images(module.group, lattice.group, [(0,), (1,)])
        report = verify_herbrand_mult(ModuleSequence(torsion, module, lattice, f, g))

        assert report.holds
        assert report.h_b == report.h_c == 2

    def test_rejects_non_equivariant_map(self):
        trivial = modules.trivial_lattice(1, 2)
        sign = modules.augmentation_ideal(2)
        zero = modules.trivial_lattice(0, 2)
        f = AbHom.identity(trivial.group)

        with pytest.raises(PreconditionError):
            verify_herbrand_mult(
                ModuleSequence(trivial, sign, zero, f, AbHom.zero(sign.group, zero.group))
            )


class TestRankFormula:
    @pytest.mark.parametrize(
        "module, log_h",
        [
            (modules.trivial_lattice(1, 3), 1),
            (modules.regular(3), 0),
            (modules.augmentation_ideal(3), -1),
        ],
    )
    def test_standard_lattices(self, module, log_h):
        report = verify_logh(module, 3)

        assert report.holds
        assert report.log_h == log_h

    def test_torsion_is_split_off(self):
        report = verify_logh(torsion_by_lattice(), 2)

        assert report.holds
        assert report.torsion_herbrand == 1
        assert report.rank == 1

    def test_requires_prime_order(self):
        with pytest.raises(PreconditionError):
            verify_logh(modules.regular(4), 4)
