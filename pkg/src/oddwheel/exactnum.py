"""Exact integer, rational and multi-quadratic arithmetic.

Everything here is an immutable value.  :class:`MultiSurd` is an element of
Q(sqrt(D1), sqrt(D2), ...) written in the basis of square roots of square-free
integers; :class:`Rotation` is a unit direction (cos, sin) with MultiSurd
coordinates.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping

__all__ = [
    "exact_rational",
    "SquareFreeDecomposition",
    "squarefree_decompose",
    "squarefree_part_of_product",
    "MultiSurd",
    "multisurd_arith",
    "Rotation",
    "RotationKind",
    "rotation_compose",
    "rotation_classify",
]


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [i for i, f in enumerate(flags) if f]


_PRIMES = _sieve(1 << 16)


def _trial_divisors():
    yield from _PRIMES
    # past the table: 6k +- 1 candidates (composites among them never divide)
    k = (_PRIMES[-1] // 6) + 1
    while True:
        yield 6 * k - 1
        yield 6 * k + 1
        k += 1


@dataclass(frozen=True)
class SquareFreeDecomposition:
    """``original == square_part**2 * radicand`` with ``radicand`` square-free."""

    original: int
    square_part: int
    radicand: int

    def __iter__(self):
        # allows ``s, d = squarefree_decompose(n)``
        return iter((self.square_part, self.radicand))


@lru_cache(maxsize=1 << 18)
def squarefree_decompose(n: int) -> SquareFreeDecomposition:
    """Split ``n >= 0`` as ``s**2 * D`` with ``D`` square-free.

    Trial division only runs up to the cube root of the unfactored cofactor.
    What is left then has at most two prime factors, so it is 1, a prime, a
    prime square or a product of two distinct primes; a perfect-square test
    tells them apart.
    """
    n = int(n)
    if n < 0:
        raise ValueError(f"cannot decompose negative integer {n}")
    if n == 0:
        return SquareFreeDecomposition(0, 1, 0)
    square, free, m = 1, 1, n
    for p in _trial_divisors():
        if p * p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            square *= p ** (e // 2)
            if e & 1:
                free *= p
    r = math.isqrt(m)
    if r * r == m:
        square *= r
    else:
        free *= m
    return SquareFreeDecomposition(n, square, free)


@lru_cache(maxsize=1 << 14)
def _factor(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    for p in _trial_divisors():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def squarefree_part_of_product(factors: Iterable[int]) -> SquareFreeDecomposition:
    """Decompose a product of (typically small) non-negative integers.

    Each factor is factored separately and the exponents merged, which is much
    cheaper than factoring the product when the factors are small, as for the
    four Heron factors of a triangle.
    """
    factors = [int(f) for f in factors]
    if any(f < 0 for f in factors):
        raise ValueError("factors must be non-negative")
    product = math.prod(factors)
    if product == 0:
        return SquareFreeDecomposition(0, 1, 0)
    exps: dict[int, int] = {}
    for f in factors:
        for p, e in _factor(f):
            exps[p] = exps.get(p, 0) + e
    square = math.prod(p ** (e // 2) for p, e in exps.items())
    free = math.prod(p for p, e in exps.items() if e & 1)
    return SquareFreeDecomposition(product, square, free)


def exact_rational(x) -> Fraction:
    """Parse an exact rational from an int, Fraction, or string like ``"3/4"``.

    Floats are refused: a printed decimal coordinate is almost never the
    intended exact point.
    """
    if isinstance(x, float):
        raise TypeError(
            f"{x!r} is a float; supply exact rationals (integers, 'p/q' strings "
            "or [num, den] pairs)"
        )
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise TypeError(f"cannot parse {x!r} as an exact rational") from exc
    return _as_fraction(x)


def _as_fraction(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, Rational)):
        raise TypeError(f"expected an exact rational, got {type(x).__name__}")
    return Fraction(x)


class MultiSurd:
    """Exact value ``sum(q_D * sqrt(D))`` over square-free ``D >= 1``.

    Stored as integer numerators over one positive common denominator, with
    radicands sorted ascending and zero terms dropped, so equal values have
    identical representations.  Zero is the empty sum.
    """

    __slots__ = ("_terms", "_den", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None) -> None:
        acc: dict[int, Fraction] = {}
        for radicand, coeff in (terms or {}).items():
            q = _as_fraction(coeff)
            if not q:
                continue
            radicand = int(radicand)
            if radicand < 0:
                raise ValueError("negative radicands are not supported")
            if radicand == 0:
                continue
            s, d = squarefree_decompose(radicand)
            acc[d] = acc.get(d, Fraction(0)) + q * s
        den = math.lcm(*(q.denominator for q in acc.values())) if acc else 1
        nums = {d: q.numerator * (den // q.denominator) for d, q in acc.items()}
        self._set(nums, den)

    def _set(self, nums: dict[int, int], den: int) -> None:
        items = [(d, a) for d, a in nums.items() if a]
        if not items:
            den = 1
        else:
            g = math.gcd(den, *(a for _, a in items))
            if g > 1:
                den //= g
                items = [(d, a // g) for d, a in items]
            if len(items) > 1:
                items.sort()
        self._terms = tuple(items)
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, nums: dict[int, int], den: int) -> MultiSurd:
        obj = cls.__new__(cls)
        obj._set(nums, den)
        return obj

    @classmethod
    def rational(cls, q) -> MultiSurd:
        q = _as_fraction(q)
        return cls._raw({1: q.numerator}, q.denominator)

    @classmethod
    def sqrt(cls, n: int, coeff=1) -> MultiSurd:
        """``coeff * sqrt(n)`` for an integer ``n >= 0``."""
        return cls({n: coeff})

    @classmethod
    def coerce(cls, x) -> MultiSurd:
        if isinstance(x, MultiSurd):
            return x
        if type(x) is int:
            return cls._raw({1: x}, 1)
        return cls.rational(x)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[int, Fraction]:
        return {d: Fraction(a, self._den) for d, a in self._terms}

    @property
    def radicands(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self._terms)

    def coefficient(self, radicand: int) -> Fraction:
        for d, a in self._terms:
            if d == radicand:
                return Fraction(a, self._den)
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self._terms[0][0] == 1)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.coefficient(1)

    def single_term(self) -> tuple[Fraction, int]:
        """Return ``(q, D)`` for a value ``q*sqrt(D)``; zero gives ``(0, 1)``."""
        if not self._terms:
            return Fraction(0), 1
        if len(self._terms) > 1:
            raise ValueError(f"{self} has more than one radical term")
        d, a = self._terms[0]
        return Fraction(a, self._den), d

    def __float__(self) -> float:
        return math.fsum(a * math.sqrt(d) for d, a in self._terms) / self._den

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic -------------------------------------------------------

    def __neg__(self) -> MultiSurd:
        return MultiSurd._raw({d: -a for d, a in self._terms}, self._den)

    def __add__(self, other) -> MultiSurd:
        try:
            other = MultiSurd.coerce(other)
        except TypeError:
            return NotImplemented
        den = self._den * other._den // math.gcd(self._den, other._den)
        f, g = den // self._den, den // other._den
        nums = {d: a * f for d, a in self._terms}
        for d, a in other._terms:
            nums[d] = nums.get(d, 0) + a * g
        return MultiSurd._raw(nums, den)

    __radd__ = __add__

    def __sub__(self, other) -> MultiSurd:
        try:
            other = MultiSurd.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> MultiSurd:
        return (-self) + other

    def __mul__(self, other) -> MultiSurd:
        try:
            other = MultiSurd.coerce(other)
        except TypeError:
            return NotImplemented
        nums: dict[int, int] = {}
        for d1, a1 in self._terms:
            for d2, a2 in other._terms:
                if d1 == 1:
                    d, c = d2, a1 * a2
                elif d2 == 1:
                    d, c = d1, a1 * a2
                else:
                    # sqrt(d1)*sqrt(d2) = g*sqrt(d1*d2/g^2) for square-free d1, d2
                    g = math.gcd(d1, d2)
                    d, c = (d1 // g) * (d2 // g), a1 * a2 * g
                nums[d] = nums.get(d, 0) + c
        return MultiSurd._raw(nums, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> MultiSurd:
        if isinstance(other, MultiSurd):
            other = other.to_fraction()
        q = _as_fraction(other)
        if not q:
            raise ZeroDivisionError("division of MultiSurd by zero")
        sign = 1 if q > 0 else -1
        return MultiSurd._raw(
            {d: sign * a * q.denominator for d, a in self._terms},
            self._den * abs(q.numerator),
        )

    def __pow__(self, k: int) -> MultiSurd:
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        result, base = MultiSurd.rational(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiSurd):
            return self._terms == other._terms and self._den == other._den
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return self == MultiSurd.rational(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.to_fraction())
            else:
                self._hash = hash((self._terms, self._den))
        return self._hash

    def __repr__(self) -> str:
        return f"MultiSurd({ {d: str(q) for d, q in self.terms.items()} })"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for d, q in self.terms.items():
            mag = abs(q)
            if d == 1:
                body = str(mag)
            elif mag == 1:
                body = f"sqrt({d})"
            else:
                body = f"{mag}*sqrt({d})"
            parts.append(("-" if q < 0 else "+", body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def multisurd_arith(x: MultiSurd, y: MultiSurd, op: str) -> MultiSurd:
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown operation {op!r}; expected 'add' or 'mul'")


class RotationKind(str, enum.Enum):
    IDENTITY = "identity"
    HALF_TURN = "half_turn"
    OTHER = "other"


_ZERO = MultiSurd()
_ONE = MultiSurd.rational(1)


@dataclass(frozen=True)
class Rotation:
    """A planar rotation given by its exact cosine and sine.

    The unit condition ``cos**2 + sin**2 == 1`` is not re-checked on every
    composition (that would square the term count); use :meth:`is_unit`.
    """

    cos: MultiSurd
    sin: MultiSurd

    @classmethod
    def identity(cls) -> Rotation:
        return cls(_ONE, _ZERO)

    @classmethod
    def half_turn(cls) -> Rotation:
        return cls(-_ONE, _ZERO)

    def compose(self, other: Rotation) -> Rotation:
        c1, s1, c2, s2 = self.cos, self.sin, other.cos, other.sin
        return Rotation(c1 * c2 - s1 * s2, c1 * s2 + s1 * c2)

    __matmul__ = compose

    def conjugate(self) -> Rotation:
        return Rotation(self.cos, -self.sin)

    def is_unit(self) -> bool:
        return self.cos * self.cos + self.sin * self.sin == 1

    def classify(self) -> RotationKind:
        if self.sin.is_zero():
            if self.cos == 1:
                return RotationKind.IDENTITY
            if self.cos == -1:
                return RotationKind.HALF_TURN
        return RotationKind.OTHER

    def angle(self) -> float:
        """Floating-point angle in (-pi, pi]; for display only."""
        return math.atan2(float(self.sin), float(self.cos))

    def apply(self, x: MultiSurd, y: MultiSurd) -> tuple[MultiSurd, MultiSurd]:
        return self.cos * x - self.sin * y, self.sin * x + self.cos * y


def rotation_compose(r1: Rotation, r2: Rotation) -> Rotation:
    return r1.compose(r2)


def rotation_classify(r: Rotation) -> RotationKind:
    return r.classify()
