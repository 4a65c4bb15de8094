"""Bounded exhaustive search for integer wheel embeddings.

Wheels are enumerated once per orbit under rotation and reflection of the
labelling.  Spoke sequences come first (lexicographically least in their
orbit); rim assignments for each spoke sequence are then matched by a
meet-in-the-middle on float hub angles, and every float match is confirmed
with the exact sign search before it is emitted.
"""

from __future__ import annotations

import itertools
import math
import time
from typing import Callable, Iterator, Sequence

import numpy as np

from .classalgebra import parity_certificate
from .errors import SearchLimitExceeded, TheoremViolation
from .wheel import WheelLengths, closing_signs, hub_angle

__all__ = [
    "dihedral_images",
    "interleave",
    "canonical_form",
    "canonicalize",
    "transform_signs",
    "canonical_spoke_sequences",
    "canonical_wheels",
    "search_wheels",
]

MATCH_TOLERANCE = 1e-9
TWO_PI = 2 * math.pi
PARITIES = ("any", "all_odd")


def _transform(seq_s, seq_r, k: int, reflect: bool):
    n = len(seq_s)
    if reflect:
        return (
            tuple(seq_s[(k - i) % n] for i in range(n)),
            tuple(seq_r[(k - i - 1) % n] for i in range(n)),
        )
    return (
        tuple(seq_s[(k + i) % n] for i in range(n)),
        tuple(seq_r[(k + i) % n] for i in range(n)),
    )


def _group(n: int):
    return [(k, refl) for refl in (False, True) for k in range(n)]


def dihedral_images(w: WheelLengths) -> list[WheelLengths]:
    """The 2n relabellings of ``w`` (rotations, then reflections)."""
    return [WheelLengths(*_transform(w.spokes, w.rims, k, r)) for k, r in _group(w.n)]


def interleave(spokes: Sequence[int], rims: Sequence[int]) -> tuple[int, ...]:
    return tuple(x for pair in zip(spokes, rims) for x in pair)


def canonical_form(w: WheelLengths) -> tuple[int, ...]:
    """Least interleaved (spoke, rim, spoke, rim, ...) sequence over all relabellings."""
    return min(
        interleave(*_transform(w.spokes, w.rims, k, r)) for k, r in _group(w.n)
    )


def canonicalize(w: WheelLengths) -> WheelLengths:
    form = canonical_form(w)
    return WheelLengths(form[0::2], form[1::2])


def transform_signs(signs: Sequence[int], k: int, reflect: bool) -> tuple[int, ...]:
    """Carry a closing sign vector along a relabelling, normalised to start with +.

    Reflecting the labelling reverses every directed angle.
    """
    n = len(signs)
    if reflect:
        out = tuple(-signs[(k - i - 1) % n] for i in range(n))
    else:
        out = tuple(signs[(k + i) % n] for i in range(n))
    if out[0] < 0:
        out = tuple(-s for s in out)
    return out


def _relabel_to_canonical(w: WheelLengths, signs: Sequence[int]):
    best = min(
        (interleave(*_transform(w.spokes, w.rims, k, r)), k, r) for k, r in _group(w.n)
    )
    form, k, r = best
    return WheelLengths(form[0::2], form[1::2]), transform_signs(signs, k, r)


def _is_least_cyclic(seq: tuple[int, ...]) -> bool:
    n = len(seq)
    rev = seq[::-1]
    for k in range(n):
        if seq[k:] + seq[:k] < seq or rev[k:] + rev[:k] < seq:
            return False
    return True


def canonical_spoke_sequences(n: int, values: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Spoke sequences that are least among their rotations and reversals, in order."""
    for seq in itertools.product(sorted(values), repeat=n):
        if _is_least_cyclic(seq):
            yield seq


def _stabilizer(spokes: tuple[int, ...]):
    n = len(spokes)
    return [
        (k, r) for k, r in _group(n) if _transform(spokes, (0,) * n, k, r)[0] == spokes
    ]


def _least_under(spokes, rims, stab) -> bool:
    """Whether ``rims`` is the least rim labelling among the spoke stabilizer's images."""
    return all(_transform(spokes, rims, k, r)[1] >= rims for k, r in stab)


def _valid_rims(s: int, t: int, values: Sequence[int]) -> list[int]:
    return [r for r in values if abs(s - t) <= r <= s + t]


def canonical_wheels(n: int, values: Sequence[int]) -> Iterator[WheelLengths]:
    """One labelling per orbit of every valid wheel with lengths from ``values``.

    The labelling yielded is not necessarily :func:`canonicalize`'d; it has the
    orbit's least spoke sequence.
    """
    values = sorted(values)
    for spokes in canonical_spoke_sequences(n, values):
        stab = _stabilizer(spokes)
        choices = [_valid_rims(spokes[i], spokes[(i + 1) % n], values) for i in range(n)]
        for rims in itertools.product(*choices):
            if _least_under(spokes, rims, stab):
                yield WheelLengths(spokes, rims)


def _signed_options(s: int, t: int, rims: list[int], allow_negative: bool):
    rim_idx, angles = [], []
    for j, r in enumerate(rims):
        theta = hub_angle(s, t, r)
        rim_idx.append(j)
        angles.append(theta)
        # degenerate angles (0 or pi) are their own mirror image
        if allow_negative and abs(s - t) < r < s + t:
            rim_idx.append(j)
            angles.append(-theta)
    return np.array(rim_idx, dtype=np.int64), np.array(angles)


def _half_sums(options):
    shape = tuple(len(a) for _, a in options)
    total = np.zeros(1)
    for _, a in options:
        total = (total[:, None] + a[None, :]).ravel()
    return total, shape


def _float_closing_rims(spokes: tuple[int, ...], choices: list[list[int]]) -> set[tuple[int, ...]]:
    """Rim tuples for which some sign vector nearly closes in floating point."""
    n = len(spokes)
    options = [
        _signed_options(spokes[i], spokes[(i + 1) % n], choices[i], allow_negative=i > 0)
        for i in range(n)
    ]
    h = (n + 1) // 2
    left, lshape = _half_sums(options[:h])
    right, rshape = _half_sums(options[h:])
    left = np.mod(left, TWO_PI)
    order = np.argsort(left, kind="stable")
    lsorted = left[order]
    m = len(lsorted)
    # shifted copies handle matches across the 0 / 2*pi seam
    lext = np.concatenate([lsorted - TWO_PI, lsorted, lsorted + TWO_PI])
    target = np.mod(-right, TWO_PI)
    lo = np.searchsorted(lext, target - MATCH_TOLERANCE, side="left")
    hi = np.searchsorted(lext, target + MATCH_TOLERANCE, side="right")
    found: set[tuple[int, ...]] = set()
    for ridx in np.nonzero(hi > lo)[0]:
        rpos = np.unravel_index(ridx, rshape)
        rrims = [int(options[h + i][0][p]) for i, p in enumerate(rpos)]
        for e in range(lo[ridx], hi[ridx]):
            lpos = np.unravel_index(order[e % m], lshape)
            lrims = [int(options[i][0][p]) for i, p in enumerate(lpos)]
            found.add(tuple(choices[i][j] for i, j in enumerate(lrims + rrims)))
    return found


def search_wheels(
    n: int,
    max_len: int,
    parity: str = "any",
    *,
    cross_check: bool = False,
    start: int = 0,
    max_nodes: int | None = None,
    max_seconds: float | None = None,
    checkpoint_every: int = 500,
    on_event: Callable[[dict], None] | None = None,
) -> Iterator[tuple[WheelLengths, tuple[int, ...]]]:
    """Yield every closing wheel with lengths in ``1..max_len``, once per orbit.

    Each result is the canonical labelling with its lexicographically first
    closing sign vector.  For ``parity="all_odd"`` and odd ``n`` nothing can
    close; a parity certificate per spoke sequence is reported through
    ``on_event`` instead, and ``cross_check`` still runs the full search to
    confirm it (raising :class:`TheoremViolation` on a hit).

    ``max_nodes`` counts spoke sequences.  When a budget runs out
    :class:`SearchLimitExceeded` is raised carrying the cursor to resume from.
    """
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    if max_len < 1:
        raise ValueError(f"max_len must be at least 1, got {max_len}")
    if parity not in PARITIES:
        raise ValueError(f"parity must be one of {PARITIES}, got {parity!r}")
    emit = on_event or (lambda event: None)
    values = list(range(1, max_len + 1, 2 if parity == "all_odd" else 1))
    short_circuit = parity == "all_odd" and n % 2 == 1
    clock = time.monotonic()
    processed = 0
    cursor = start - 1
    for cursor, spokes in enumerate(canonical_spoke_sequences(n, values)):
        if cursor < start:
            continue
        if max_nodes is not None and processed >= max_nodes:
            emit({"event": "checkpoint", "cursor": cursor, "complete": False})
            raise SearchLimitExceeded(cursor, "node limit")
        if max_seconds is not None and time.monotonic() - clock > max_seconds:
            emit({"event": "checkpoint", "cursor": cursor, "complete": False})
            raise SearchLimitExceeded(cursor, "time limit")
        if processed and processed % checkpoint_every == 0:
            emit({"event": "checkpoint", "cursor": cursor, "complete": False})
        processed += 1

        if short_circuit:
            emit({
                "event": "certificate",
                "spokes": list(spokes),
                "parity": parity_certificate(spokes).to_dict(),
            })
            if not cross_check:
                continue

        choices = [_valid_rims(spokes[i], spokes[(i + 1) % n], values) for i in range(n)]
        if not all(choices):
            continue
        stab = _stabilizer(spokes)
        hits = []
        for rims in sorted(_float_closing_rims(spokes, choices)):
            if not _least_under(spokes, rims, stab):
                continue
            w = WheelLengths(spokes, rims)
            signs = next(iter(closing_signs(w)), None)
            if signs is None:
                continue
            if short_circuit:
                raise TheoremViolation(f"all-odd odd wheel closes: {w}")
            canon, canon_signs = _relabel_to_canonical(w, signs)
            hits.append((interleave(canon.spokes, canon.rims), canon, canon_signs))
        for _, canon, witness in sorted(hits, key=lambda h: h[0]):
            yield canon, witness
    emit({"event": "checkpoint", "cursor": cursor + 1, "complete": True})
