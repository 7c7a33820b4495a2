import math
from fractions import Fraction

import pytest

from clone_entanglement.exact import QuadraticSurd, square_free_split


def sqrt(n, coefficient=1):
    return QuadraticSurd.from_sqrt(coefficient, n)


@pytest.mark.parametrize('n, expected', [(0, (0, 1)), (1, (1, 1)), (72, (6, 2)), (49, (7, 1)), (30, (1, 30))])
def test_square_free_split(n, expected):
    assert square_free_split(n) == expected


def test_from_sqrt_of_rational_radicand():
    half = QuadraticSurd.from_sqrt(1, Fraction(1, 2))
    assert half.terms == ((2, Fraction(1, 2)),)
    assert QuadraticSurd.from_sqrt(3, 4) == QuadraticSurd.from_rational(6)
    assert QuadraticSurd.from_sqrt(5, 0) == QuadraticSurd()


def test_products_stay_canonical():
    assert sqrt(2) * sqrt(2) == QuadraticSurd.from_rational(2)
    assert sqrt(2) * sqrt(3) == sqrt(6)
    assert sqrt(6) * sqrt(10) == sqrt(15, 2)
    one_plus_root2 = sqrt(2) + 1
    assert one_plus_root2.square() == sqrt(2, 2) + 3


def test_rational_views():
    assert QuadraticSurd.from_rational(Fraction(2, 3)).is_rational
    assert QuadraticSurd.from_rational(Fraction(2, 3)).to_fraction() == Fraction(2, 3)
    assert QuadraticSurd().to_fraction() == 0
    assert not sqrt(2).is_rational
    with pytest.raises(ValueError):
        sqrt(2).to_fraction()


def test_sign_close_to_zero():
    assert sqrt(2).compare(Fraction(141421356, 100000000)) == 1
    assert sqrt(2).compare(Fraction(141421357, 100000000)) == -1
    assert (sqrt(2) + sqrt(3) - sqrt(10)).sign() == -1
    assert (sqrt(2) + sqrt(8) - sqrt(18)).sign() == 0


def test_sign_falls_back_to_exact_evaluation():
    # 10**20 sqrt(2) - floor(10**20 sqrt(2)) lies in (0, 1), far below double resolution at this scale
    gap = sqrt(2, 10 ** 20) - math.isqrt(2 * 10 ** 40)
    assert gap.sign() == 1
    assert (-gap).sign() == -1


def test_compare_square():
    root2 = sqrt(2)
    assert root2.compare_square(2) == 0
    assert root2.compare_square(Fraction(199, 100)) == 1
    pair = sqrt(2) + sqrt(3)
    # (sqrt2 + sqrt3)^2 = 5 + 2 sqrt6 ~ 9.899
    assert pair.compare_square(Fraction(99, 10)) == -1
    assert pair.compare_square(Fraction(98, 10)) == 1
    with pytest.raises(ValueError):
        (-root2).compare_square(1)


def test_float_and_text():
    value = sqrt(2, Fraction(1, 8))
    assert float(value) == pytest.approx(2 ** 0.5 / 8, abs=1e-15)
    assert str(value) == "1/8*sqrt(2)"
    assert str(sqrt(3) - 1) == "-1+1*sqrt(3)"
    assert str(QuadraticSurd()) == "0"
