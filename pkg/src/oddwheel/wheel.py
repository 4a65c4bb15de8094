"""Integer-edge embeddings of the wheel graph W_n.

The hub sits at the origin and rim vertices A_1..A_n follow the cycle.  Each
triangle O A_i A_{i+1} fixes the magnitude of the hub angle from its three
side lengths; an explicit sign vector fixes the direction.  A set of lengths
is realizable exactly when some sign vector makes the composed rotation the
identity.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .classalgebra import Conclusion, eq4_holds, parity_certificate
from .errors import (
    CoordinateError,
    Eq4Violation,
    InputFormatError,
    InvalidTriangleError,
    NoClassError,
    PreconditionError,
    ResidualSumViolation,
    TheoremViolation,
    TrailBreakError,
)
from .exactnum import MultiSurd, Rotation, RotationKind, exact_rational
from .triangle import (
    IntTriangle,
    angle_class,
    characteristic,
    odd_triangle_class,
    triangle_rotation,
)

__all__ = [
    "WheelLengths",
    "CertificateKind",
    "Certificate",
    "ResidualGroup",
    "ClassTrail",
    "check_signs",
    "wheel_angles",
    "closure_decide",
    "coordinates",
    "closing_signs",
    "realizable",
    "residual_group_check",
    "class_trail",
    "class_trail_steps",
    "certify_odd_wheel",
    "verify_coordinates",
    "hub_angle",
]

# float sums of at most a few dozen atan2 values are accurate to ~1e-13, so a
# sign vector whose float sum stays this far from every multiple of 2*pi
# cannot close exactly
PREFILTER_MARGIN = 1e-9
TWO_PI = 2 * math.pi


def _positive_int_list(value, name: str) -> tuple[int, ...]:
    if not isinstance(value, (list, tuple)):
        raise InputFormatError(name, "expected a list of positive integers")
    for i, v in enumerate(value):
        if isinstance(v, bool) or not isinstance(v, int) or v <= 0:
            raise InputFormatError(name, f"entry {i} ({v!r}) is not a positive integer")
    return tuple(value)


@dataclass(frozen=True)
class WheelLengths:
    spokes: tuple[int, ...]
    rims: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "spokes", _positive_int_list(self.spokes, "spokes"))
        object.__setattr__(self, "rims", _positive_int_list(self.rims, "rims"))
        if len(self.spokes) < 3:
            raise InputFormatError("spokes", f"a wheel needs n >= 3, got {len(self.spokes)}")
        if len(self.rims) != len(self.spokes):
            raise InputFormatError(
                "rims", f"expected {len(self.spokes)} rim lengths, got {len(self.rims)}"
            )

    @property
    def n(self) -> int:
        return len(self.spokes)

    def triangle(self, i: int) -> IntTriangle:
        """Triangle i: rim ``rims[i]`` opposite the hub, spokes i and i+1."""
        n = self.n
        return IntTriangle(self.rims[i % n], self.spokes[i % n], self.spokes[(i + 1) % n])

    def triangles(self) -> list[IntTriangle]:
        return [self.triangle(i) for i in range(self.n)]

    def check(self) -> None:
        for i, t in enumerate(self.triangles()):
            if not t.is_valid():
                raise InvalidTriangleError(
                    f"triangle {i} (rim {t.a}; spokes {t.b}, {t.c}) violates the "
                    "triangle inequality",
                    index=i,
                )

    def is_valid(self) -> bool:
        return all(t.is_valid() for t in self.triangles())

    def degenerate_indices(self) -> list[int]:
        return [i for i, t in enumerate(self.triangles()) if t.is_degenerate()]

    def all_odd(self) -> bool:
        return all(x % 2 for x in self.spokes + self.rims)

    def to_dict(self, signs: Sequence[int] | None = None) -> dict:
        out = {"n": self.n, "spokes": list(self.spokes), "rims": list(self.rims)}
        if signs is not None:
            out["signs"] = list(signs)
        return out

    @classmethod
    def from_dict(cls, doc) -> tuple[WheelLengths, tuple[int, ...] | None]:
        """Parse ``{"n", "spokes", "rims", "signs"?}``; returns lengths and signs."""
        if not isinstance(doc, dict):
            raise InputFormatError("<root>", "expected a JSON object")
        for key in ("n", "spokes", "rims"):
            if key not in doc:
                raise InputFormatError(key, "missing")
        n = doc["n"]
        if isinstance(n, bool) or not isinstance(n, int) or n < 3:
            raise InputFormatError("n", f"expected an integer >= 3, got {n!r}")
        spokes = _positive_int_list(doc["spokes"], "spokes")
        rims = _positive_int_list(doc["rims"], "rims")
        if len(spokes) != n:
            raise InputFormatError("spokes", f"expected {n} entries, got {len(spokes)}")
        if len(rims) != n:
            raise InputFormatError("rims", f"expected {n} entries, got {len(rims)}")
        signs = doc.get("signs")
        if signs is not None:
            try:
                signs = check_signs(signs, n)
            except ValueError as exc:
                raise InputFormatError("signs", str(exc)) from None
        return cls(spokes, rims), signs


def check_signs(signs: Iterable[int], n: int) -> tuple[int, ...]:
    signs = tuple(signs)
    if len(signs) != n:
        raise ValueError(f"expected {n} signs, got {len(signs)}")
    for s in signs:
        if isinstance(s, bool) or s not in (1, -1):
            raise ValueError(f"sign {s!r} is not +1 or -1")
    return signs


def wheel_angles(w: WheelLengths, signs: Sequence[int] | None = None) -> list[Rotation]:
    """The n hub angles as exact rotations, directed by ``signs`` (default all +)."""
    signs = check_signs(signs, w.n) if signs is not None else (1,) * w.n
    w.check()
    return [triangle_rotation(t, s) for t, s in zip(w.triangles(), signs)]


def _compose_all(rotations: Iterable[Rotation]) -> Rotation:
    total = Rotation.identity()
    for r in rotations:
        total = total @ r
    return total


def closure_decide(w: WheelLengths, signs: Sequence[int]) -> bool:
    """True iff the directed hub angles sum to a multiple of 2*pi (zero included)."""
    return _compose_all(wheel_angles(w, signs)).classify() is RotationKind.IDENTITY


def coordinates(w: WheelLengths, signs: Sequence[int]) -> list[tuple[MultiSurd, MultiSurd]]:
    """Exact vertex positions: the hub, then A_1 = (r_1, 0), ..., A_n."""
    rotations = wheel_angles(w, signs)
    points = [(MultiSurd(), MultiSurd())]
    direction = Rotation.identity()
    for i in range(w.n):
        r = w.spokes[i]
        points.append((direction.cos * r, direction.sin * r))
        direction = direction @ rotations[i]
    return points


def hub_angle(spoke1: int, spoke2: int, rim: int) -> float:
    """Float magnitude of the hub angle, accurate near 0 and pi (atan2, not acos)."""
    num = spoke1 * spoke1 + spoke2 * spoke2 - rim * rim
    disc = 4 * spoke1 * spoke1 * spoke2 * spoke2 - num * num
    return math.atan2(math.sqrt(max(disc, 0)), num)


def _distance_to_2pi_multiple(x: float) -> float:
    r = math.fmod(x, TWO_PI)
    return min(abs(r), TWO_PI - abs(r))


class CertificateKind(str, enum.Enum):
    PARITY_CONTRADICTION = "parity_contradiction"
    CLOSURE_FAILURE_ALL_SIGNS = "closure_failure_all_signs"
    RESIDUAL_SUM_VIOLATION = "residual_sum_violation"
    REALIZABLE = "realizable"


@dataclass(frozen=True)
class Certificate:
    kind: CertificateKind
    detail: dict = field(default_factory=dict)
    wheel: WheelLengths | None = None
    signs: tuple[int, ...] | None = None

    def to_dict(self) -> dict:
        out = {"kind": self.kind.value, "detail": self.detail}
        if self.wheel is not None:
            out["input"] = self.wheel.to_dict(self.signs)
        return out


def _rotation_json(r: Rotation) -> dict:
    return {"cos": str(r.cos), "sin": str(r.sin), "angle": r.angle()}


def _point_json(p: tuple[MultiSurd, MultiSurd]) -> dict:
    return {"x": str(p[0]), "y": str(p[1]), "float": [float(p[0]), float(p[1])]}


def _sign_vectors(n: int):
    # first sign fixed to + (mirror symmetry); + sorts before -
    for rest in itertools.product((1, -1), repeat=n - 1):
        yield (1,) + rest


def _exact_closing_signs(rotations: list[Rotation]):
    """Depth-first over sign vectors, sharing prefix compositions."""
    n = len(rotations)
    conj = [r.conjugate() for r in rotations]

    def walk(i: int, acc: Rotation, prefix: tuple[int, ...]):
        if i == n:
            if acc.classify() is RotationKind.IDENTITY:
                yield prefix
            return
        choices = ((1, rotations[i]),) if i == 0 else ((1, rotations[i]), (-1, conj[i]))
        for s, r in choices:
            yield from walk(i + 1, acc @ r, prefix + (s,))

    yield from walk(0, Rotation.identity(), ())


def _prefiltered_closing_signs(w: WheelLengths, rotations: list[Rotation]):
    mags = [hub_angle(t.b, t.c, t.a) for t in w.triangles()]
    for signs in _sign_vectors(w.n):
        total = math.fsum(s * m for s, m in zip(signs, mags))
        if _distance_to_2pi_multiple(total) > PREFILTER_MARGIN:
            continue
        exact = _compose_all(r if s > 0 else r.conjugate() for s, r in zip(signs, rotations))
        if exact.classify() is RotationKind.IDENTITY:
            yield signs


def _rim_vertices_distinct(points) -> bool:
    rim = points[1:]
    return len(set(rim)) == len(rim)


def closing_signs(w: WheelLengths, prefilter: bool = True) -> Iterator[tuple[int, ...]]:
    """Every closing sign vector with first sign +, in lexicographic order (+ first).

    With ``prefilter`` a float angle sum discards sign vectors that are
    provably far from closing before any exact work; each yielded vector is
    still confirmed exactly.
    """
    rotations = wheel_angles(w)
    if prefilter:
        return _prefiltered_closing_signs(w, rotations)
    return _exact_closing_signs(rotations)


def realizable(
    w: WheelLengths,
    strict: bool = False,
    prefilter: bool = True,
    with_coordinates: bool = True,
) -> Certificate:
    """Search all 2**(n-1) sign vectors for an exact closure.

    The witness is the lexicographically first closing sign vector.
    ``strict`` additionally rejects witnesses whose rim vertices coincide.
    """
    rotations = wheel_angles(w)
    total = 2 ** (w.n - 1)
    rejected = 0
    for signs in closing_signs(w, prefilter):
        if strict or with_coordinates:
            points = coordinates(w, signs)
            if strict and not _rim_vertices_distinct(points):
                rejected += 1
                continue
        detail = {"witness_signs": list(signs)}
        if with_coordinates:
            detail["coordinates"] = [_point_json(p) for p in points]
        return Certificate(CertificateKind.REALIZABLE, detail, w, signs)
    detail = {
        "sign_vectors_checked": total,
        "rotations": [_rotation_json(r) for r in rotations],
        "all_plus_total": _rotation_json(_compose_all(rotations)),
    }
    if strict:
        detail["coincident_rejections"] = rejected
    return Certificate(CertificateKind.CLOSURE_FAILURE_ALL_SIGNS, detail, w)


@dataclass(frozen=True)
class ResidualGroup:
    """Angles sharing one residual; ``residual`` is None for degenerate angles."""

    residual: int | None
    indices: tuple[int, ...]
    rotation: Rotation
    kind: RotationKind
    turn: str

    def to_dict(self) -> dict:
        return {
            "residual": self.residual,
            "indices": list(self.indices),
            "rotation": _rotation_json(self.rotation),
            "kind": self.kind.value,
            "multiple_of": self.turn,
        }


_HALF = Fraction(1, 2)
_SQRT3_HALF = MultiSurd({3: _HALF})


def _turn_multiple(r: Rotation) -> str | None:
    """Which of pi, pi/2, pi/3 the rotation angle is a multiple of (coarsest)."""
    if r.classify() is not RotationKind.OTHER:
        return "pi"
    if r.cos.is_zero() and r.sin in (MultiSurd.rational(1), MultiSurd.rational(-1)):
        return "pi/2"
    if r.cos in (MultiSurd.rational(_HALF), MultiSurd.rational(-_HALF)) and r.sin in (
        _SQRT3_HALF,
        -_SQRT3_HALF,
    ):
        return "pi/3"
    return None


def _residual_key(w: WheelLengths, i: int) -> int | None:
    return characteristic(w.triangle(i))


def residual_group_check(w: WheelLengths, signs: Sequence[int]) -> list[ResidualGroup]:
    """Compose the angles of each residual separately on a closed wheel.

    Every group must land on a multiple of pi/2 or pi/3 and, after that, on a
    multiple of pi.  Degenerate angles form their own group.  A failing group
    raises :class:`ResidualSumViolation`.
    """
    rotations = wheel_angles(w, signs)
    if _compose_all(rotations).classify() is not RotationKind.IDENTITY:
        raise PreconditionError("the wheel does not close under these signs")
    groups: dict[int | None, list[int]] = {}
    for i in range(w.n):
        groups.setdefault(_residual_key(w, i), []).append(i)
    out = []
    for key in sorted(groups, key=lambda k: (k is None, k or 0)):
        idx = tuple(groups[key])
        rot = _compose_all(rotations[i] for i in idx)
        turn = _turn_multiple(rot)
        if turn is None or rot.classify() is RotationKind.OTHER:
            raise ResidualSumViolation(key, f"({rot.cos}, {rot.sin})")
        out.append(ResidualGroup(key, idx, rot, rot.classify(), turn))
    return out


@dataclass(frozen=True)
class ClassTrail:
    order: tuple[int, ...]
    steps: tuple[int, ...]
    classes: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "order": list(self.order),
            "step_classes": list(self.steps),
            "trail": list(self.classes),
            "returns_to_start": self.classes[-1] == self.classes[0],
        }


def class_trail_steps(w: WheelLengths) -> ClassTrail:
    """Classes of the partial angle sums, angles grouped by residual.

    Every step is checked against the mod-8 addition rule.  A partial sum with
    no class raises :class:`TrailBreakError` (expected once a residual group
    that does not sum to a multiple of pi is finished).
    """
    if not w.all_odd():
        raise PreconditionError("class trails need every spoke and rim odd")
    rotations = wheel_angles(w)
    order = tuple(sorted(range(w.n), key=lambda i: (_residual_key(w, i), i)))
    partial = Rotation.identity()
    classes = [angle_class(1)]
    steps = []
    for pos, i in enumerate(order, start=1):
        step = odd_triangle_class(w.spokes[i], w.spokes[(i + 1) % w.n])
        if angle_class(rotations[i].cos) != step:
            raise TheoremViolation(f"angle {i}: class shortcut disagrees with its cosine")
        partial = partial @ rotations[i]
        try:
            cls = angle_class(partial.cos)
        except NoClassError as exc:
            raise TrailBreakError(
                f"partial sum {pos} has cosine {partial.cos} with no class ({exc})", pos
            ) from None
        if not eq4_holds(classes[-1], step, cls):
            raise Eq4Violation(
                f"step {pos}: class {classes[-1]} + class {step} -> {cls} breaks the "
                "mod-8 addition rule"
            )
        classes.append(cls)
        steps.append(step)
    return ClassTrail(order, tuple(steps), tuple(classes))


def class_trail(w: WheelLengths) -> list[int]:
    return list(class_trail_steps(w).classes)


def certify_odd_wheel(w: WheelLengths, cross_check: bool | None = None) -> Certificate:
    """Certify that an all-odd odd wheel cannot close.

    The certificate is the parity count of spoke products that are 1 mod 4.
    ``cross_check`` (default: when n <= 9) also runs the exhaustive exact sign
    search, which must fail.
    """
    if w.n % 2 == 0:
        raise PreconditionError(f"n = {w.n} is even; only odd wheels are covered")
    if not w.all_odd():
        raise PreconditionError("every spoke and rim length must be odd")
    w.check()
    cert = parity_certificate(w.spokes)
    if cert.conclusion is not Conclusion.CONTRADICTION:
        raise TheoremViolation(f"parity certificate inconclusive: {cert}")
    detail = {"parity": cert.to_dict()}
    if cross_check is None:
        cross_check = w.n <= 9
    if cross_check:
        search = realizable(w, with_coordinates=False)
        if search.kind is CertificateKind.REALIZABLE:
            raise TheoremViolation(f"odd wheel closes: {search.detail['witness_signs']}")
        detail["cross_check"] = {
            "sign_vectors_checked": search.detail["sign_vectors_checked"],
            "closed": False,
        }
    try:
        detail["trail"] = class_trail_steps(w).to_dict()
    except TrailBreakError as exc:
        detail["trail"] = {"break_at": exc.position, "reason": str(exc)}
    return Certificate(CertificateKind.PARITY_CONTRADICTION, detail, w)


def _exact_point(p) -> tuple[Fraction, Fraction]:
    if not isinstance(p, (list, tuple)) or len(p) != 2:
        raise CoordinateError(f"point {p!r} is not an (x, y) pair")
    try:
        return exact_rational(p[0]), exact_rational(p[1])
    except TypeError as exc:
        raise CoordinateError(str(exc)) from None


def _integer_length(sq: Fraction, what: str, require_odd: bool) -> int:
    if sq.denominator != 1 or math.isqrt(sq.numerator) ** 2 != sq.numerator:
        raise CoordinateError(
            f"{what} has squared length {sq}, not the square of an integer; if the "
            "coordinates were rounded decimals, supply exact rationals instead"
        )
    length = math.isqrt(sq.numerator)
    if require_odd and length % 2 == 0:
        raise CoordinateError(f"{what} has even length {length}")
    return length


def verify_coordinates(points, require_odd: bool = False) -> tuple[WheelLengths, tuple[int, ...]]:
    """Recover wheel lengths and signs from exact coordinates (hub first)."""
    pts = [_exact_point(p) for p in points]
    if len(pts) < 4:
        raise CoordinateError(f"need the hub and at least 3 rim points, got {len(pts)}")
    if len(set(pts)) != len(pts):
        raise CoordinateError("points are not pairwise distinct")
    hx, hy = pts[0]
    rim = [(x - hx, y - hy) for x, y in pts[1:]]
    n = len(rim)
    spokes = [
        _integer_length(x * x + y * y, f"spoke {i}", require_odd) for i, (x, y) in enumerate(rim)
    ]
    rims, signs = [], []
    for i in range(n):
        (x1, y1), (x2, y2) = rim[i], rim[(i + 1) % n]
        rims.append(
            _integer_length((x2 - x1) ** 2 + (y2 - y1) ** 2, f"rim edge {i}", require_odd)
        )
        signs.append(1 if x1 * y2 - y1 * x2 >= 0 else -1)
    w = WheelLengths(tuple(spokes), tuple(rims))
    signs = tuple(signs)
    if not closure_decide(w, signs):
        raise TheoremViolation("coordinates were consistent but the recovered angles do not close")
    return w, signs
