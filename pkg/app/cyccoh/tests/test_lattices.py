import itertools
import random
from fractions import Fraction

import pytest

from core.exceptions import LatticeDecompositionError, SpecFileError
from cyccoh import modules
from cyccoh.io import format_module, parse_module
from cyccoh.lattices import LatticeDecomposition, diederichsen_multiplicities
from cyccoh.tate import herbrand, tate_h0, tate_hm1, verify_logh
from exactalg.matrix import random_unimodular

GRID = [
    (r, s, t, p)
    for p in (2, 3, 5)
    for r, s, t in itertools.product(range(7), repeat=3)
    if r + s + t <= 6
]
CONJUGATE_GRID = [
    (r, s, t, p)
    for p in (2, 3)
    for r, s, t in itertools.product(range(6), repeat=3)
    if r + s + t <= 5
]


def test_trivial_lattice():
    assert diederichsen_multiplicities(modules.trivial_lattice(4, 3), 3) == LatticeDecomposition(
        4, 0, 0, 3
    )


def test_regular_module():
    assert diederichsen_multiplicities(modules.regular(2), 2) == LatticeDecomposition(0, 0, 1, 2)


def test_conjugated_sum(rng):
    module = modules.diederichsen_lattice(2, 1, 2, 3)
    q, q_inv = random_unimodular(module.rank, rng)
    conjugated = modules.conjugate_lattice(module, q, q_inv)

    assert diederichsen_multiplicities(conjugated, 3) == LatticeDecomposition(2, 1, 2, 3)


def test_torsion_is_rejected():
    with pytest.raises(LatticeDecompositionError):
        diederichsen_multiplicities(modules.finite_cyclic(3, -1, 2), 2)


@pytest.mark.parametrize("r, s, t, p", GRID)
def test_round_trip(r, s, t, p):
    module = modules.diederichsen_lattice(r, s, t, p)

    assert diederichsen_multiplicities(module, p) == LatticeDecomposition(r, s, t, p)


@pytest.mark.parametrize("r, s, t, p", CONJUGATE_GRID)
def test_round_trip_through_conjugates(r, s, t, p):
    module = modules.diederichsen_lattice(r, s, t, p)
    rng = random.Random(1000 * p + 100 * r + 10 * s + t)

    for _ in range(10):
        q, q_inv = random_unimodular(module.rank, rng)
        conjugated = modules.conjugate_lattice(module, q, q_inv)

        assert diederichsen_multiplicities(conjugated, p) == LatticeDecomposition(r, s, t, p)


@pytest.mark.parametrize("seed", range(200))
def test_random_modules(seed):
    """Conjugated lattices plus a finite summand keep every invariant."""
    rng = random.Random(seed)
    p = rng.choice((2, 3, 5))
    r, s, t = (rng.randint(0, 2) for _ in range(3))
    lattice = modules.diederichsen_lattice(r, s, t, p)
    q, q_inv = random_unimodular(lattice.rank, rng, steps=6)
    conjugated = modules.conjugate_lattice(lattice, q, q_inv)

    assert herbrand(conjugated) == herbrand(lattice) == Fraction(p) ** (r - s)
    assert diederichsen_multiplicities(conjugated, p) == LatticeDecomposition(r, s, t, p)
    assert verify_logh(conjugated, p).holds

    k = rng.randint(1, p - 1)
    assert tate_h0(conjugated.with_generator(k)) == tate_h0(conjugated)
    assert tate_hm1(conjugated.with_generator(k)) == tate_hm1(conjugated)

    mixed = modules.direct_sum_modules([conjugated, modules.finite_cyclic(p * p, 1 + p, p)])
    assert herbrand(mixed) == herbrand(conjugated)


def test_module_file_round_trip():
    module = modules.augmentation_ideal(3)

    assert parse_module(format_module(module)) == module


def test_module_file_comments_and_torsion():
    module = parse_module(
        """
        # Z/3 with inversion
        n=2
        group
        torsion 3
        sigma
        1 1
        2
        """
    )

    assert module == modules.finite_cyclic(3, -1, 2)


@pytest.mark.parametrize("text", ["group\nfree 1\n", "n=2\ngroup\nfree 1\nsigma\n1 1\n2\n"])
def test_bad_module_files(text):
    with pytest.raises(SpecFileError):
        parse_module(text)
