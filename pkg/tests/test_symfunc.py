import random
from fractions import Fraction
from itertools import permutations
from itertools import product
from typing import List
from typing import Sequence

import pytest

from asai_local.scalars import GaussRational
from asai_local.scalars import Scalar
from asai_local.symfunc import Partition
from asai_local.symfunc import SchurError
from asai_local.symfunc import determinant
from asai_local.symfunc import identity_check
from asai_local.symfunc import partitions
from asai_local.symfunc import partitions_up_to
from asai_local.symfunc import schur_bialternant
from asai_local.symfunc import schur_jacobi_trudi


def ssyt_schur(shape: Sequence[int], t: Sequence[Scalar]) -> Scalar:
    """Sums the monomials of all semistandard Young tableaux of a shape."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    total = Scalar(0)
    for filling in product(range(len(t)), repeat=len(cells)):
        entry = dict(zip(cells, filling))
        rows_ok = all(entry[(r, c)] <= entry[(r, c + 1)] for r, c in cells if (r, c + 1) in entry)
        cols_ok = all(entry[(r, c)] < entry[(r + 1, c)] for r, c in cells if (r + 1, c) in entry)
        if rows_ok and cols_ok:
            term = Scalar(1)
            for value in filling:
                term = term * t[value]
            total = total + term
    return total


def random_distinct(rng: random.Random, n: int) -> List[Scalar]:
    values: List[Scalar] = []
    while len(values) < n:
        x = Scalar(Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9)))
        if x not in values:
            values.append(x)
    return values


def random_partition(rng: random.Random, n: int, max_size: int) -> Partition:
    size = rng.randint(0, max_size)
    return rng.choice(partitions(size, n))


################
#  partitions  #
################


def test_partitions_order():
    assert partitions(3, 2) == (Partition((2, 1)), Partition((3, 0)))


def test_partitions_count():
    # partitions of 6 into at most 3 parts
    assert len(partitions(6, 3)) == 7
    assert partitions(0, 4) == (Partition((0, 0, 0, 0)),)


def test_partitions_listing():
    assert [lam.parts for lam in partitions(5, 2)] == [(3, 2), (4, 1), (5, 0)]
    assert partitions(3, 0) == ()


def test_partitions_up_to():
    sizes = [lam.size for lam in partitions_up_to(4, 2)]
    assert sizes == sorted(sizes)
    assert len(sizes) == 1 + 1 + 2 + 2 + 3


def test_partition_validation():
    with pytest.raises(SchurError):
        Partition((0, 1))
    with pytest.raises(SchurError):
        Partition((1, -1))


def test_partition_trailing_zeros():
    assert Partition((2, 1, 0)) == Partition((2, 1))
    assert Partition((2, 1)).padded(4).parts == (2, 1, 0, 0)
    assert Partition((2, 1)).doubled().parts == (4, 2)


#################
#  determinant  #
#################


def test_determinant():
    matrix = [[Scalar(0), Scalar(2)], [Scalar(3), Scalar(4)]]
    assert determinant(matrix) == -6
    assert determinant([]) == 1


def test_determinant_over_sqrt_q():
    root = Scalar(0, 1, 5)
    assert determinant([[root, 1], [1, root]]) == 4
    assert determinant([[GaussRational(0, 1), 1], [1, GaussRational(0, 1)]]) == -2


def test_determinant_singular():
    assert determinant([[1, 2, 3], [2, 4, 6], [0, 1, GaussRational(1, 1)]]) == 0


########################
#  schur_jacobi_trudi  #
########################


def test_schur_first_elementary():
    t = [Scalar(GaussRational(1, 2)), Scalar(Fraction(3, 5))]
    assert schur_jacobi_trudi((1, 0), t) == t[0] + t[1]


def test_schur_empty_partition():
    assert schur_jacobi_trudi((), [Scalar(7), Scalar(2)]) == 1


def test_schur_against_tableaux():
    t = [Scalar(1), Scalar(2), Scalar(3)]
    assert ssyt_schur((2, 1), t) == 60
    assert schur_jacobi_trudi((2, 1), t) == 60


@pytest.mark.parametrize("shape", [(3,), (2, 2), (3, 1), (2, 1, 1), (3, 2, 1)])
def test_schur_against_tableaux_shapes(shape):
    t = [Scalar(2), Scalar(GaussRational(0, 1)), Scalar(Fraction(-1, 3))]
    assert schur_jacobi_trudi(shape, t) == ssyt_schur(shape, t)


def test_schur_repeated_parameters():
    assert schur_jacobi_trudi((2, 0), [Scalar(2), Scalar(2)]) == 12


def test_schur_too_many_parts():
    with pytest.raises(SchurError):
        schur_jacobi_trudi((1, 1, 1), [Scalar(1), Scalar(2)])


def test_schur_symmetry():
    t = [Scalar(2), Scalar(GaussRational(1, -1)), Scalar(Fraction(1, 3))]
    values = {schur_jacobi_trudi((3, 1, 1), list(p)) for p in permutations(t)}
    assert len(values) == 1


def test_schur_stability():
    t = [Scalar(2), Scalar(Fraction(-1, 2)), Scalar(3)]
    assert schur_jacobi_trudi((2, 1), t + [Scalar(0)]) == schur_jacobi_trudi((2, 1), t)
    assert schur_jacobi_trudi((2, 1, 1, 1), t + [Scalar(0)]) == 0


#######################
#  schur_bialternant  #
#######################


def test_bialternant_simple():
    assert schur_bialternant((1, 0), [Scalar(2), Scalar(3)]) == 5


def test_bialternant_complete():
    a, b = Scalar(Fraction(1, 2)), Scalar(GaussRational(0, 3))
    assert schur_bialternant((2, 0), [a, b]) == a * a + a * b + b * b


def test_bialternant_repeated():
    with pytest.raises(SchurError):
        schur_bialternant((1, 0), [Scalar(2), Scalar(2)])


def test_bialternant_matches_jacobi_trudi():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(1, 5)
        t = random_distinct(rng, n)
        lam = random_partition(rng, n, 8)
        assert schur_bialternant(lam, t) == schur_jacobi_trudi(lam, t)


####################
#  identity_check  #
####################


def test_identity_cauchy_single():
    report = identity_check("cauchy", [Scalar(2)], [Scalar(3)], 4)
    assert report.passed


def test_identity_littlewood_even_single():
    assert identity_check("littlewood_even", [Scalar(3)], bound=3).passed


def test_identity_littlewood_two_parameters():
    assert identity_check("littlewood", [Scalar(Fraction(1, 2)), Scalar(Fraction(1, 3))], bound=8).passed


@pytest.mark.parametrize("kind", ["cauchy", "littlewood", "littlewood_even"])
def test_identity_random(kind):
    rng = random.Random(kind)
    for _ in range(3):
        n = rng.randint(1, 3)
        t = [Scalar(GaussRational(Fraction(rng.randint(1, 9), rng.randint(1, 9)), rng.randint(-2, 2))) for _ in range(n)]
        u = [Scalar(Fraction(rng.randint(1, 9), rng.randint(1, 9))) for _ in range(n)] if kind == "cauchy" else None
        assert identity_check(kind, t, u, 6).passed


def test_identity_cauchy_needs_second_list():
    with pytest.raises(SchurError):
        identity_check("cauchy", [Scalar(2)], bound=2)
    with pytest.raises(SchurError):
        identity_check("littlewood", [Scalar(2)], [Scalar(3)], 2)


def test_identity_zero_parameter():
    with pytest.raises(SchurError):
        identity_check("littlewood", [Scalar(0)], bound=2)


def test_identity_unknown_kind():
    with pytest.raises(SchurError):
        identity_check("plethysm", [Scalar(2)], bound=2)
