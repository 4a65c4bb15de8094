import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oddwheel.errors import CoordinateError, InputFormatError, NonIntegralError
from oddwheel.pointset import (
    characteristic_invariance,
    is_collinear,
    parse_points_document,
    validate_integral,
)

RECTANGLE = [(0, 0), (4, 0), (4, 3), (0, 3)]


def test_rectangle():
    ps = validate_integral(RECTANGLE)
    off_diagonal = sorted(ps.distances[i][j] for i in range(4) for j in range(i + 1, 4))
    assert off_diagonal == [3, 3, 4, 4, 5, 5]
    assert characteristic_invariance(ps) == 1


def test_right_triangle():
    ps = validate_integral([(0, 0), (3, 0), (0, 4)])
    assert sorted([ps.distances[0][1], ps.distances[0][2], ps.distances[1][2]]) == [3, 4, 5]


def test_non_integral_pair():
    with pytest.raises(NonIntegralError) as exc:
        validate_integral([(0, 0), (1, 1)])
    assert (exc.value.i, exc.value.j) == (0, 1)
    assert exc.value.squared == 2


def test_collinear_gives_none():
    assert characteristic_invariance(validate_integral([(0, 0), (1, 0), (2, 0)])) is None
    assert is_collinear((0, 0), (1, 1), (Fraction(5, 2), Fraction(5, 2)))


def test_rectangle_translated_rational():
    shift = Fraction(1, 7)
    pts = [(x + shift, y - shift) for x, y in RECTANGLE]
    assert characteristic_invariance(validate_integral(pts)) == 1


def test_equilateral_with_rational_coordinates_impossible():
    with pytest.raises(NonIntegralError):
        validate_integral([(0, 0), (2, 0), (1, Fraction(17, 10))])


def test_too_few_or_duplicate_points():
    with pytest.raises(CoordinateError):
        validate_integral([(0, 0)])
    with pytest.raises(CoordinateError):
        validate_integral([(0, 0), (0, 0), (3, 4)])
    with pytest.raises(CoordinateError):
        validate_integral([(0.0, 0), (3, 4)])


def test_parse_document():
    pts = parse_points_document({"points": [[0, 1, 0, 1], [9, 2, 1, 3]]})
    assert pts == [(0, 0), (Fraction(9, 2), Fraction(1, 3))]
    with pytest.raises(InputFormatError):
        parse_points_document({"points": [[1, 0, 1, 1]]})
    with pytest.raises(InputFormatError) as exc:
        parse_points_document({"points": [[1, 1, 1]]})
    assert exc.value.field == "points[0]"


# A family with integer pairwise distances: (0, ±12) with points on the x-axis
# at 5, 9, 16, 35 from the origin (hypotenuses 13, 15, 20, 37).
FAMILY = [(0, 12), (0, -12)] + [(x, 0) for x in (0, 5, -5, 9, -9, 16, -16, 35, -35)]
ROTATIONS = [(Fraction(1), Fraction(0)), (Fraction(3, 5), Fraction(4, 5)),
             (Fraction(5, 13), Fraction(12, 13)), (Fraction(8, 17), Fraction(15, 17))]
shifts = st.fractions(min_value=-10, max_value=10, max_denominator=20)


@settings(max_examples=150, deadline=None)
@given(
    st.lists(st.sampled_from(FAMILY), min_size=2, max_size=8, unique=True),
    st.sampled_from(ROTATIONS),
    shifts,
    shifts,
)
def test_random_integral_sets_share_characteristic(base, rot, dx, dy):
    c, s = rot
    pts = [(c * x - s * y + dx, s * x + c * y + dy) for x, y in base]
    ps = validate_integral(pts)
    d = characteristic_invariance(ps)
    triples = list(itertools.combinations(pts, 3))
    flat = all(is_collinear(*t) for t in triples)
    # rational coordinates give rational areas, so the characteristic is 1
    assert d == (None if flat else 1)
