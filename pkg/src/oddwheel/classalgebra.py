"""Mod-8 class transitions and the parity certificate for odd wheels.

Adding an angle of class 1 or 5 moves along a *crossing* edge of the
transition graph; adding an angle of class 3 or 7 moves along an *internal*
edge.  Crossing edges form a bipartite graph whose parts also contain every
internal edge, so a closed trail uses an even number of crossing steps.
"""

from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .errors import NotBipartiteError
from .triangle import CLASSES

__all__ = [
    "eq4_holds",
    "enumerate_odd_solutions",
    "TransitionGraph",
    "build_transition_graph",
    "bipartition",
    "Conclusion",
    "ParityCertificate",
    "parity_certificate",
]

CROSSING_STEPS = frozenset({1, 5})
INTERNAL_STEPS = frozenset({3, 7})


def eq4_holds(m1: int, m2: int, m3: int) -> bool:
    """Whether ``m1^2 + m2^2 + m3^2 - m1*m2*m3 - 4 = 0 (mod 8)``."""
    return (m1 * m1 + m2 * m2 + m3 * m3 - m1 * m2 * m3 - 4) % 8 == 0


def enumerate_odd_solutions() -> list[tuple[int, int, int]]:
    """Sorted solutions over Z_8 with an odd coordinate, up to reordering."""
    found = {
        tuple(sorted(t))
        for t in itertools.product(range(8), repeat=3)
        if eq4_holds(*t) and any(x % 2 for x in t)
    }
    return sorted(found)


def _edge(x: int, y: int) -> frozenset[int]:
    return frozenset((x, y))


@dataclass(frozen=True)
class TransitionGraph:
    vertices: frozenset[int] = CLASSES
    crossing_edges: frozenset[frozenset[int]] = field(default_factory=frozenset)
    internal_edges: frozenset[frozenset[int]] = field(default_factory=frozenset)

    @staticmethod
    def edge_list(edges) -> list[list[int]]:
        # loops are one-element frozensets; print them as [x, x]
        return sorted(sorted(e) * (2 if len(e) == 1 else 1) for e in edges)

    def to_dict(self) -> dict:
        return {
            "vertices": sorted(self.vertices),
            "crossing_edges": self.edge_list(self.crossing_edges),
            "internal_edges": self.edge_list(self.internal_edges),
        }


def build_transition_graph() -> TransitionGraph:
    crossing, internal = set(), set()
    for triple in enumerate_odd_solutions():
        for i, step in enumerate(triple):
            x, y = triple[:i] + triple[i + 1 :]
            if step in CROSSING_STEPS:
                crossing.add(_edge(x, y))
            elif step in INTERNAL_STEPS:
                internal.add(_edge(x, y))
    return TransitionGraph(CLASSES, frozenset(crossing), frozenset(internal))


def bipartition(g: TransitionGraph) -> tuple[frozenset[int], frozenset[int]]:
    """Two-colour the crossing edges; the part holding the smallest vertex comes first.

    Raises :class:`NotBipartiteError` if the crossing edges contain an odd
    cycle (including a loop) or an internal edge joins the two parts.
    """
    adj: dict[int, set[int]] = {v: set() for v in g.vertices}
    for e in g.crossing_edges:
        if len(e) == 1:
            (v,) = e
            raise NotBipartiteError(f"crossing loop at {v}")
        x, y = e
        adj[x].add(y)
        adj[y].add(x)
    colour: dict[int, int] = {}
    for start in sorted(g.vertices):
        if start in colour:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in sorted(adj[v]):
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
                elif colour[w] == colour[v]:
                    raise NotBipartiteError(f"crossing edges contain an odd cycle through {v}-{w}")
    for e in g.internal_edges:
        if len({colour[v] for v in e}) > 1:
            raise NotBipartiteError(f"internal edge {sorted(e)} joins the two parts")
    part_a = frozenset(v for v, c in colour.items() if c == 0)
    part_b = frozenset(v for v, c in colour.items() if c == 1)
    return part_a, part_b


class Conclusion(str, enum.Enum):
    CONTRADICTION = "contradiction"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ParityCertificate:
    n: int
    spoke_products_mod4: tuple[int, ...]
    crossing_step_count: int
    conclusion: Conclusion

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "spoke_products_mod4": list(self.spoke_products_mod4),
            "crossing_step_count": self.crossing_step_count,
            "conclusion": self.conclusion.value,
        }


def parity_certificate(spokes: Sequence[int]) -> ParityCertificate:
    """Count the cyclic spoke products that are 1 mod 4.

    With all spokes odd the products multiply to a square, so an even number
    of them are 3 mod 4; for odd ``n`` the count of crossing steps is then odd
    and the class trail cannot return to its start.
    """
    n = len(spokes)
    if n < 3:
        raise ValueError(f"a wheel needs at least 3 spokes, got {n}")
    products = tuple((spokes[i] * spokes[(i + 1) % n]) % 4 for i in range(n))
    count = sum(1 for p in products if p == 1)
    all_odd = all(r % 2 for r in spokes)
    if all_odd and n % 2 == 1 and count % 2 == 1:
        conclusion = Conclusion.CONTRADICTION
    else:
        conclusion = Conclusion.INCONCLUSIVE
    return ParityCertificate(n, products, count, conclusion)
