import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oddwheel.errors import InvalidTriangleError, NoClassError
from oddwheel.exactnum import MultiSurd, squarefree_decompose
from oddwheel.triangle import (
    IntTriangle,
    angle_class,
    angle_residual,
    characteristic,
    class_shortcut_sweep,
    residue_sweep,
    odd_triangle_class,
    triangle_area,
    triangle_cos,
    triangle_rotation,
    triangle_sin,
)


@pytest.mark.parametrize(
    "sides, cos",
    [((4, 4, 6), Fraction(3, 4)), ((1, 1, 1), Fraction(1, 2)), ((5, 3, 4), Fraction(0))],
)
def test_cos(sides, cos):
    assert triangle_cos(IntTriangle(*sides)) == cos


def test_cos_outside_unit_interval_iff_invalid():
    for a in range(1, 15):
        for b in range(1, 8):
            for c in range(1, 8):
                t = IntTriangle(a, b, c)
                assert (abs(triangle_cos(t)) <= 1) == t.is_valid()


@pytest.mark.parametrize("sides", [(0, 1, 1), (1, -2, 2), (1.0, 1, 1)])
def test_non_positive_sides_rejected(sides):
    with pytest.raises(InvalidTriangleError):
        IntTriangle(*sides)


def test_sin_examples():
    assert triangle_sin(IntTriangle(4, 4, 6)) == MultiSurd({7: Fraction(1, 4)})
    assert triangle_sin(IntTriangle(1, 1, 1)) == MultiSurd({3: Fraction(1, 2)})
    assert triangle_sin(IntTriangle(3, 1, 2)).is_zero()


def test_sin_from_raw_formula():
    # sqrt(1008)/48 computed directly from the discriminant
    t = IntTriangle(4, 4, 6)
    assert t.discriminant == 2304 - 1296 == 1008
    assert triangle_sin(t) == MultiSurd.sqrt(1008, Fraction(1, 48))


def test_invalid_triangle_sin():
    with pytest.raises(InvalidTriangleError):
        triangle_sin(IntTriangle(10, 1, 2))
    with pytest.raises(InvalidTriangleError):
        characteristic(IntTriangle(10, 1, 2))


def test_area_examples():
    assert triangle_area(IntTriangle(3, 4, 5)) == 6
    assert triangle_area(IntTriangle(1, 1, 1)) == MultiSurd({3: Fraction(1, 4)})
    assert triangle_area(IntTriangle(9, 6, 5)) == MultiSurd.sqrt(3200, Fraction(1, 4))
    assert triangle_area(IntTriangle(9, 6, 5)) == MultiSurd({2: 10})


@pytest.mark.parametrize("sides, d", [((4, 4, 6), 7), ((9, 6, 5), 2), ((3, 1, 2), None), ((3, 4, 5), 1)])
def test_characteristic(sides, d):
    assert characteristic(IntTriangle(*sides)) == d


sides = st.integers(min_value=1, max_value=60)


@given(sides, sides, sides)
def test_characteristic_is_symmetric_and_matches_discriminant(a, b, c):
    t = IntTriangle(a, b, c)
    if not t.is_valid():
        return
    d = characteristic(t)
    assert d == characteristic(IntTriangle(b, c, a)) == characteristic(IntTriangle(c, a, b))
    direct = squarefree_decompose(t.discriminant).radicand
    assert d == (direct or None)


@given(sides, sides, sides)
def test_unit_and_radicand(a, b, c):
    t = IntTriangle(a, b, c)
    if not t.is_valid():
        return
    s = triangle_sin(t)
    cos = MultiSurd.rational(triangle_cos(t))
    assert s * s + cos * cos == 1
    if not s.is_zero():
        assert s.single_term()[1] == characteristic(t)
        assert angle_residual(triangle_rotation(t)) == characteristic(t)
    assert math.isclose(float(s), math.sin(math.acos(float(triangle_cos(t)))), abs_tol=1e-7)


def test_angle_residual_of_multiples_of_pi():
    assert angle_residual(triangle_rotation(IntTriangle(3, 1, 2))) is None


# -- classes -----------------------------------------------------------------


@pytest.mark.parametrize(
    "cos, cls",
    [(1, 2), (Fraction(1, 2), 1), (Fraction(-1, 2), 7), (-1, 6), (Fraction(1, 6), 3), (Fraction(-1, 3), 2)],
)
def test_angle_class(cos, cls):
    assert angle_class(cos) == cls


def brute_force_class(q: Fraction):
    # search small p = 1 (mod 8) with 2p*q integral; class is m mod 8
    for p in range(1, 10**4, 8):
        m = q * 2 * p
        if m.denominator == 1:
            return int(m) % 8
    return None


@given(st.fractions(min_value=-1, max_value=1, max_denominator=300))
def test_angle_class_against_search(q):
    expected = brute_force_class(q) if q else None
    if expected is None or expected in (0, 4):
        with pytest.raises(NoClassError):
            angle_class(q)
    else:
        assert angle_class(q) == expected


@pytest.mark.parametrize("cos", [0, Fraction(1, 4), Fraction(3, 8), Fraction(2, 3)])
def test_no_class(cos):
    with pytest.raises(NoClassError):
        angle_class(cos)


def test_no_class_for_irrational():
    with pytest.raises(NoClassError):
        angle_class(MultiSurd.sqrt(2))


def test_class_is_sign_independent():
    for t in [IntTriangle(3, 3, 5), IntTriangle(7, 5, 3), IntTriangle(1, 1, 1)]:
        plus, minus = triangle_rotation(t, 1), triangle_rotation(t, -1)
        assert angle_class(plus.cos) == angle_class(minus.cos)


@pytest.mark.parametrize("s1, s2, cls", [(1, 1, 1), (3, 5, 7), (3, 3, 1)])
def test_odd_triangle_class(s1, s2, cls):
    assert odd_triangle_class(s1, s2) == cls


def test_odd_triangle_class_rejects_even():
    with pytest.raises(ValueError):
        odd_triangle_class(2, 3)


def test_spokes_3_5_any_rim():
    for rim in (3, 5, 7):
        assert angle_class(triangle_cos(IntTriangle(rim, 3, 5))) == 7


def test_odd_triangles_never_degenerate():
    for a in range(1, 30, 2):
        for b in range(1, 30, 2):
            for c in range(1, 30, 2):
                t = IntTriangle(a, b, c)
                if t.is_valid():
                    assert not t.is_degenerate()


def test_sweeps_small():
    assert residue_sweep(31)["passed"]
    assert class_shortcut_sweep(21)["passed"]


def test_residue_rule_needs_odd_sides():
    # the 3 mod 8 property is specific to odd sides
    assert characteristic(IntTriangle(4, 4, 6)) % 8 != 3
