import itertools
import random

import pytest

from oddwheel.classalgebra import (
    Conclusion,
    TransitionGraph,
    bipartition,
    build_transition_graph,
    enumerate_odd_solutions,
    eq4_holds,
    parity_certificate,
)
from oddwheel.errors import NotBipartiteError
from oddwheel.exactnum import RotationKind
from oddwheel.errors import NoClassError
from oddwheel.triangle import IntTriangle, angle_class, triangle_rotation

KNOWN_TRIPLES = [
    (1, 1, 2), (1, 1, 7), (1, 2, 5), (1, 3, 5), (1, 3, 6), (1, 6, 7), (2, 3, 3), (2, 3, 7),
    (2, 5, 5), (2, 7, 7), (3, 3, 7), (3, 5, 6), (5, 5, 7), (5, 6, 7), (7, 7, 7),
]


@pytest.mark.parametrize("t, ok", [((1, 1, 2), True), ((1, 2, 3), False), ((7, 7, 7), True)])
def test_eq4_examples(t, ok):
    assert eq4_holds(*t) is ok


def test_eq4_symmetric():
    for t in itertools.product(range(8), repeat=3):
        assert len({eq4_holds(*p) for p in itertools.permutations(t)}) == 1


def test_enumeration_matches_list():
    assert enumerate_odd_solutions() == KNOWN_TRIPLES


def test_enumeration_exhaustive_scan():
    # 512-case scan written independently of the enumerator
    count = 0
    for a in range(8):
        for b in range(8):
            for c in range(8):
                if (a * a + b * b + c * c - a * b * c - 4) % 8 == 0 and (a % 2 or b % 2 or c % 2):
                    assert tuple(sorted((a, b, c))) in KNOWN_TRIPLES
                    count += 1
    assert count > 15  # ordered triples, several per sorted one


def test_even_only_solution_excluded():
    assert eq4_holds(2, 2, 2)
    assert (2, 2, 2) not in enumerate_odd_solutions()


def test_graph_edges():
    g = build_transition_graph()
    assert frozenset({1, 2}) in g.crossing_edges
    assert frozenset({7}) in g.internal_edges
    assert not g.crossing_edges & g.internal_edges
    assert len(g.crossing_edges) == 8 and len(g.internal_edges) == 10
    assert g.vertices == {1, 2, 3, 5, 6, 7}


def test_bipartition():
    g = build_transition_graph()
    a, b = bipartition(g)
    assert {a, b} == {frozenset({1, 5, 6}), frozenset({2, 3, 7})}
    for e in g.crossing_edges:
        x, y = tuple(e)
        assert (x in a) != (y in a)
    for e in g.internal_edges:
        assert e <= a or e <= b


def test_single_class1_step_from_two_crosses():
    a, b = bipartition(build_transition_graph())
    # 0 + 60 degrees: class 2 -> class 1
    one = angle_class(triangle_rotation(IntTriangle(1, 1, 1)).cos)
    assert one == 1
    assert (2 in a) != (one in a)


def test_fictitious_edge_breaks_bipartiteness():
    g = build_transition_graph()
    bad = TransitionGraph(g.vertices, g.crossing_edges | {frozenset({1, 5})}, g.internal_edges)
    with pytest.raises(NotBipartiteError):
        bipartition(bad)


def test_internal_edge_across_parts_rejected():
    g = build_transition_graph()
    bad = TransitionGraph(g.vertices, g.crossing_edges, g.internal_edges | {frozenset({1, 2})})
    with pytest.raises(NotBipartiteError):
        bipartition(bad)


@pytest.mark.parametrize(
    "spokes, products, count, conclusion",
    [
        ((1, 1, 1, 1, 1), (1, 1, 1, 1, 1), 5, Conclusion.CONTRADICTION),
        ((1, 1, 3, 3, 1), (1, 3, 1, 3, 1), 3, Conclusion.CONTRADICTION),
        ((1,) * 6, (1,) * 6, 6, Conclusion.INCONCLUSIVE),
        ((3, 5, 7, 3, 5), (3, 3, 1, 3, 3), 1, Conclusion.CONTRADICTION),
        ((2, 1, 1), (2, 1, 2), 1, Conclusion.INCONCLUSIVE),
    ],
)
def test_parity_certificate(spokes, products, count, conclusion):
    cert = parity_certificate(spokes)
    assert cert.spoke_products_mod4 == products
    assert cert.crossing_step_count == count
    assert cert.conclusion is conclusion


def test_parity_count_odd_for_every_odd_wheel():
    for n in (3, 5, 7):
        for spokes in itertools.product((1, 3, 5, 7), repeat=n):
            cert = parity_certificate(spokes)
            assert cert.crossing_step_count % 2 == 1
            assert cert.conclusion is Conclusion.CONTRADICTION


def test_parity_needs_three_spokes():
    with pytest.raises(ValueError):
        parity_certificate((1, 1))


def test_class_addition_rule_on_random_rotations():
    rng = random.Random(2024)
    checked = 0
    for _ in range(3000):
        tri = []
        for _ in range(2):
            b, c = rng.randint(1, 25), rng.randint(1, 25)
            a = rng.randint(abs(b - c) or 1, b + c)
            tri.append(triangle_rotation(IntTriangle(a, b, c), rng.choice((1, -1))))
        r1, r2 = tri
        total = r1 @ r2
        if not total.cos.is_rational():
            continue
        try:
            m1, m2, m3 = angle_class(r1.cos), angle_class(r2.cos), angle_class(total.cos)
        except NoClassError:
            continue
        assert eq4_holds(m1, m2, m3)
        checked += 1
    assert checked > 100


def test_class_addition_rule_same_residual_pairs():
    # pairs from one residual always compose to a rational cosine
    rng = random.Random(5)
    tris = [IntTriangle(a, b, c) for a in range(1, 30, 2) for b in range(1, 30, 2)
            for c in range(1, 30, 2) if IntTriangle(a, b, c).is_valid()]
    by_res = {}
    for t in tris:
        r = triangle_rotation(t)
        by_res.setdefault(r.sin.single_term()[1], []).append(r)
    pairs = 0
    for group in by_res.values():
        for r1, r2 in itertools.combinations(group[:15], 2):
            for s in (1, -1):
                r2s = r2 if s > 0 else r2.conjugate()
                total = r1 @ r2s
                assert total.cos.is_rational()
                if total.classify() is RotationKind.OTHER or True:
                    m3 = angle_class(total.cos)
                    assert eq4_holds(angle_class(r1.cos), angle_class(r2.cos), m3)
                    pairs += 1
    assert pairs > 100
