"""Exact geometry of integer-sided triangles.

The angle of interest sits opposite side ``a``, between sides ``b`` and ``c``.
Signs of directed angles are not handled here; sines are the non-negative
branch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidTriangleError, NoClassError
from .exactnum import MultiSurd, Rotation, squarefree_part_of_product

__all__ = [
    "IntTriangle",
    "triangle_cos",
    "triangle_sin",
    "triangle_area",
    "triangle_rotation",
    "characteristic",
    "angle_residual",
    "angle_class",
    "odd_triangle_class",
    "CLASSES",
    "residue_sweep",
    "class_shortcut_sweep",
]

CLASSES = frozenset({1, 2, 3, 5, 6, 7})


@dataclass(frozen=True)
class IntTriangle:
    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise InvalidTriangleError(f"side {name}={v!r} is not an integer")
            if v <= 0:
                raise InvalidTriangleError(f"side {name}={v} is not positive")

    @property
    def heron_factors(self) -> tuple[int, int, int, int]:
        a, b, c = self.a, self.b, self.c
        return (a + b + c, -a + b + c, a - b + c, a + b - c)

    @property
    def discriminant(self) -> int:
        """``4b^2c^2 - (b^2+c^2-a^2)^2``, i.e. sixteen times the squared area."""
        a, b, c = self.a, self.b, self.c
        return 4 * b * b * c * c - (b * b + c * c - a * a) ** 2

    def is_valid(self) -> bool:
        return min(self.heron_factors) >= 0

    def is_degenerate(self) -> bool:
        return self.is_valid() and min(self.heron_factors) == 0

    def check(self) -> None:
        if not self.is_valid():
            raise InvalidTriangleError(
                f"sides ({self.a}, {self.b}, {self.c}) violate the triangle inequality"
            )


def triangle_cos(t: IntTriangle) -> Fraction:
    """Law of cosines.  Outside ``[-1, 1]`` exactly when the triangle is invalid."""
    return Fraction(t.b * t.b + t.c * t.c - t.a * t.a, 2 * t.b * t.c)


def _root_discriminant(t: IntTriangle) -> tuple[int, int]:
    # (s, D) with discriminant = s^2 * D; Heron factors keep the factoring cheap
    t.check()
    dec = squarefree_part_of_product(t.heron_factors)
    return dec.square_part, dec.radicand


def triangle_sin(t: IntTriangle) -> MultiSurd:
    s, d = _root_discriminant(t)
    if d == 0:
        return MultiSurd()
    return MultiSurd._raw({d: s}, 2 * t.b * t.c)


def triangle_area(t: IntTriangle) -> MultiSurd:
    s, d = _root_discriminant(t)
    if d == 0:
        return MultiSurd()
    return MultiSurd._raw({d: s}, 4)


@lru_cache(maxsize=1 << 16)
def triangle_rotation(t: IntTriangle, sign: int = 1) -> Rotation:
    """The angle between sides ``b`` and ``c`` as a rotation, turned by ``sign``."""
    sin = triangle_sin(t)
    return Rotation(MultiSurd.rational(triangle_cos(t)), sin if sign > 0 else -sin)


def characteristic(t: IntTriangle) -> int | None:
    """Square-free part of sixteen times the squared area; ``None`` if degenerate."""
    _, d = _root_discriminant(t)
    return d or None


def angle_residual(r: Rotation) -> int | None:
    """The residual D of an angle with rational cosine and sine ``q*sqrt(D)``.

    Multiples of pi have every residual, reported as ``None``.  Angles with no
    residual raise :class:`ValueError`.
    """
    if not r.cos.is_rational():
        raise ValueError(f"cosine {r.cos} is irrational; the angle has no residual")
    if r.sin.is_zero():
        return None
    _, d = r.sin.single_term()
    return d


def angle_class(cosine) -> int:
    """The class ``m mod 8`` of an angle with ``cos = m / (2p)``, ``p = 1 mod 8``.

    Reduced cosine ``a/b``: for odd ``b`` take ``k`` with ``b*k = 1 (mod 8)`` and
    ``m = 2ak``; for ``b = 2 (mod 4)`` take ``(b/2)*k = 1 (mod 8)`` and ``m = ak``.
    Cosines where neither applies, or where ``m`` lands on 0 or 4, have no class.
    """
    if isinstance(cosine, MultiSurd):
        if not cosine.is_rational():
            raise NoClassError(f"cosine {cosine} is irrational")
        cosine = cosine.to_fraction()
    q = Fraction(cosine)
    if q == 0:
        raise NoClassError("cosine 0 has no class")
    if abs(q) > 1:
        raise NoClassError(f"cosine {q} is outside [-1, 1]")
    a, b = q.numerator, q.denominator
    if b % 2 == 1:
        # odd residues mod 8 are their own inverses
        m = 2 * a * (b % 8)
    elif b % 4 == 2:
        m = a * ((b // 2) % 8)
    else:
        raise NoClassError(f"cosine {q}: 4 divides the denominator")
    m %= 8
    if m not in CLASSES:
        raise NoClassError(f"cosine {q} gives m = {m} (mod 8), which is not a class")
    return m


def odd_triangle_class(spoke1: int, spoke2: int) -> int:
    """Class of the hub angle of a triangle with odd spokes (any odd rim)."""
    if spoke1 <= 0 or spoke2 <= 0 or spoke1 % 2 == 0 or spoke2 % 2 == 0:
        raise ValueError(f"spokes must be odd and positive, got ({spoke1}, {spoke2})")
    return (spoke1 * spoke2) % 8


def _odd_triples(bound: int):
    odd = range(1, bound + 1, 2)
    for a in odd:
        for b in odd:
            for c in odd:
                if a < b + c and b < a + c and c < a + b:
                    yield a, b, c


def residue_sweep(bound: int = 99) -> dict:
    """Check that every odd-sided triangle with sides <= bound has characteristic 3 mod 8."""
    cases = 0
    for a, b, c in _odd_triples(bound):
        cases += 1
        d = characteristic(IntTriangle(a, b, c))
        if d is None or d % 8 != 3:
            return {"bound": bound, "cases": cases, "passed": False,
                    "counterexample": {"sides": [a, b, c], "characteristic": d}}
    return {"bound": bound, "cases": cases, "passed": True}


def class_shortcut_sweep(bound: int = 49) -> dict:
    """Check class(cos) == spoke1*spoke2 mod 8 over odd triangles with sides <= bound."""
    cases = 0
    for rim, s1, s2 in _odd_triples(bound):
        cases += 1
        got = angle_class(triangle_cos(IntTriangle(rim, s1, s2)))
        if got != odd_triangle_class(s1, s2):
            return {"bound": bound, "cases": cases, "passed": False,
                    "counterexample": {"rim": rim, "spokes": [s1, s2], "class": got}}
    return {"bound": bound, "cases": cases, "passed": True}
