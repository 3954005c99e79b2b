"""Cover ideals, symbolic powers, m-covers, 2-cover classification."""
import pytest

from symdef.covers import (
    classify_indecomposable_2cover,
    cover_ideal,
    enumerate_minimal_mcovers,
    indecomposability_by_membership,
    is_m_cover,
    minimal_mcovers,
    ordinary_power,
    symbolic_power,
)
from symdef.graphs import Graph, complete, cycle, path, triangle_tail
from symdef.monomials import Monomial, all_ones


def test_cover_ideal_k3():
    I = cover_ideal(complete(3))
    assert I.gens == (Monomial((1, 1, 0)), Monomial((1, 0, 1)), Monomial((0, 1, 1)))
    assert I.alpha() == 2


def test_cover_ideal_edgeless_is_unit():
    assert cover_ideal(Graph.from_edges(2, [])).is_unit()


def test_cover_ideal_generators_are_minimal_covers():
    for G in (cycle(5), path(4), triangle_tail(2)):
        for g in cover_ideal(G).gens:
            assert g.is_squarefree()
            assert is_m_cover(G, g, 1)
            # dropping any support vertex breaks some edge
            for i in g.support():
                smaller = Monomial(tuple(0 if j == i else e for j, e in enumerate(g.exps)))
                assert not is_m_cover(G, smaller, 1)


def test_symbolic_power_zero_and_one():
    G = cycle(4)
    assert symbolic_power(G, 0).is_unit()
    assert symbolic_power(G, 1) == cover_ideal(G)


def test_symbolic_power_against_direct_enumeration():
    for G in (complete(3), complete(4), cycle(5), path(4), triangle_tail(2)):
        for m in (1, 2, 3):
            assert minimal_mcovers(G, m) == enumerate_minimal_mcovers(G, m)


def test_ordinary_power_matches_plain_ideal_power():
    G = cycle(5)
    I = cover_ideal(G)
    for m in range(4):
        assert ordinary_power(G, m) == I.power(m)


def test_ordinary_inside_symbolic():
    for G in (complete(4), cycle(5), triangle_tail(2)):
        for m in (2, 3, 4):
            assert symbolic_power(G, m).contains_ideal(ordinary_power(G, m))


def test_is_m_cover():
    G = complete(3)
    assert is_m_cover(G, Monomial((1, 1, 0)), 1)
    assert not is_m_cover(G, Monomial((0, 0, 0)), 1)
    assert is_m_cover(G, all_ones(3), 2)
    with pytest.raises(ValueError):
        is_m_cover(G, Monomial((1, 1)), 1)


def test_k3_has_three_1covers():
    assert len(minimal_mcovers(complete(3), 1)) == 3


class TestClassify2:
    def test_all_ones_on_odd_cycle(self):
        cls = classify_indecomposable_2cover(cycle(5), all_ones(5))
        assert cls is not None and cls.kind == "all_ones"

    def test_all_ones_on_bipartite_decomposes(self):
        # x1x2x3x4 on C4 splits into the two opposite pairs
        cls = classify_indecomposable_2cover(cycle(4), all_ones(4))
        assert cls is None

    def test_decomposable_square(self):
        G = complete(3)
        f = Monomial((2, 2, 0))  # (x1x2)^2
        assert classify_indecomposable_2cover(G, f) is None

    def test_non_minimal_rejected(self):
        with pytest.raises(ValueError):
            classify_indecomposable_2cover(complete(3), Monomial((2, 2, 2)))

    def test_szt_pattern_appears_on_triangle_with_tail(self):
        G = triangle_tail(3)
        kinds = set()
        for f in minimal_mcovers(G, 2):
            cls = classify_indecomposable_2cover(G, f)
            if cls is not None:
                kinds.add(cls.kind)
                if cls.kind == "szt":
                    assert set(cls.S) | set(cls.T) | set(cls.U) == set(range(G.n))
                    assert set(cls.T) == G.neighbors_of_set(cls.S)
                    assert cls.u > 0
        assert kinds == {"all_ones", "szt"}

    def test_agrees_with_membership(self):
        for G in (complete(4), cycle(5), triangle_tail(2), triangle_tail(3)):
            for f in minimal_mcovers(G, 2):
                structural = classify_indecomposable_2cover(G, f) is not None
                assert structural == indecomposability_by_membership(G, f)
