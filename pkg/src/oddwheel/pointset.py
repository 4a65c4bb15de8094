"""Integral point sets and the shared-characteristic check."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import CharacteristicViolation, CoordinateError, InputFormatError, NonIntegralError
from .exactnum import exact_rational
from .triangle import IntTriangle, characteristic

__all__ = [
    "IntegralPointSet",
    "parse_points_document",
    "validate_integral",
    "is_collinear",
    "characteristic_invariance",
]

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class IntegralPointSet:
    points: tuple[Point, ...]
    distances: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict:
        return {
            "points": [[str(x), str(y)] for x, y in self.points],
            "distances": [list(row) for row in self.distances],
        }


def parse_points_document(doc) -> list[Point]:
    """Read ``{"points": [[xnum, xden, ynum, yden], ...]}``."""
    if not isinstance(doc, dict) or "points" not in doc:
        raise InputFormatError("points", "missing")
    raw = doc["points"]
    if not isinstance(raw, list):
        raise InputFormatError("points", "expected a list")
    out = []
    for i, entry in enumerate(raw):
        if (
            not isinstance(entry, list)
            or len(entry) != 4
            or any(isinstance(v, bool) or not isinstance(v, int) for v in entry)
        ):
            raise InputFormatError(f"points[{i}]", "expected [num, den, num, den] integers")
        if entry[1] == 0 or entry[3] == 0:
            raise InputFormatError(f"points[{i}]", "zero denominator")
        out.append((Fraction(entry[0], entry[1]), Fraction(entry[2], entry[3])))
    return out


def _squared_distance(p: Point, q: Point) -> Fraction:
    return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2


def validate_integral(points) -> IntegralPointSet:
    try:
        pts = tuple((exact_rational(x), exact_rational(y)) for x, y in points)
    except TypeError as exc:
        raise CoordinateError(str(exc)) from None
    if len(pts) < 2:
        raise CoordinateError("an integral point set needs at least 2 points")
    if len(set(pts)) != len(pts):
        raise CoordinateError("points are not pairwise distinct")
    n = len(pts)
    dist = [[0] * n for _ in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        sq = _squared_distance(pts[i], pts[j])
        root = math.isqrt(sq.numerator) if sq.denominator == 1 else -1
        if root < 0 or root * root != sq.numerator:
            raise NonIntegralError(i, j, sq)
        dist[i][j] = dist[j][i] = root
    return IntegralPointSet(pts, tuple(tuple(r) for r in dist))


def is_collinear(p: Point, q: Point, r: Point) -> bool:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]) == 0


def characteristic_invariance(ps: IntegralPointSet) -> int | None:
    """The characteristic shared by all non-collinear triples, or None if all collinear.

    Collinearity comes from the coordinate determinant and is cross-checked
    against the zero-area test on the three distances.
    """
    common = None
    first = None
    for i, j, k in itertools.combinations(range(len(ps.points)), 3):
        d = ps.distances
        by_distance = characteristic(IntTriangle(d[j][k], d[i][j], d[i][k]))
        flat = is_collinear(ps.points[i], ps.points[j], ps.points[k])
        if flat != (by_distance is None):
            raise CharacteristicViolation(
                f"triple {(i, j, k)}: determinant and distance-area disagree on collinearity"
            )
        if flat:
            continue
        if common is None:
            common, first = by_distance, (i, j, k)
        elif by_distance != common:
            raise CharacteristicViolation(
                f"triple {first} has characteristic {common} but {(i, j, k)} has {by_distance}"
            )
    return common
