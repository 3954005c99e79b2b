"""Cover ideals, symbolic powers, m-cover semantics, and the
classification of indecomposable 2-covers."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iter_product

import numpy as np

from .graphs import Graph
from .monomials import Monomial, MonomialIdeal, all_ones

ENUMERATION_BUDGET = 2_000_000


@lru_cache(maxsize=None)
def cover_ideal(G: Graph) -> MonomialIdeal:
    """Intersection over the edges of the 2-generated ideals (x_i, x_j).

    Generators are exactly the minimal vertex covers.  An edgeless graph
    yields the unit ideal (vacuous intersection).
    """
    return symbolic_power(G, 1)


def _edge_power(n: int, i: int, j: int, m: int) -> MonomialIdeal:
    # (x_i, x_j)^m is generated by x_i^a x_j^(m-a), 0 <= a <= m
    rows = np.zeros((m + 1, n), dtype=np.int64)
    rows[:, i] = np.arange(m, -1, -1)
    rows[:, j] = np.arange(0, m + 1)
    return MonomialIdeal._from_array(n, rows, minimal=True)


@lru_cache(maxsize=None)
def symbolic_power(G: Graph, m: int) -> MonomialIdeal:
    """m-th symbolic power of the cover ideal: the intersection over all
    edges of (x_i, x_j)^m, folded pairwise in ascending edge order."""
    if m < 0:
        raise ValueError("symbolic power needs m >= 0")
    if m == 0:
        return MonomialIdeal.unit(G.n)
    result = MonomialIdeal.unit(G.n)
    for i, j in G.edge_list():
        result = result.intersect(_edge_power(G.n, i, j, m))
    return result


@lru_cache(maxsize=None)
def ordinary_power(G: Graph, m: int) -> MonomialIdeal:
    """m-th ordinary power of the cover ideal, built incrementally so
    repeated queries over an m-range share work."""
    if m < 0:
        raise ValueError("ordinary power needs m >= 0")
    if m == 0:
        return MonomialIdeal.unit(G.n)
    if m == 1:
        return cover_ideal(G)
    return ordinary_power(G, m - 1).multiply(cover_ideal(G))


def is_m_cover(G: Graph, f: Monomial, m: int) -> bool:
    """True iff the exponents of f sum to at least m on every edge."""
    if f.n != G.n:
        raise ValueError(f"monomial on {f.n} variables, graph on {G.n}")
    return all(f.exps[i] + f.exps[j] >= m for i, j in G.edges)


def minimal_mcovers(G: Graph, m: int) -> tuple[Monomial, ...]:
    """The minimal vertex m-covers: minimal generators of the m-th
    symbolic power."""
    return symbolic_power(G, m).gens


def enumerate_minimal_mcovers(G: Graph, m: int) -> tuple[Monomial, ...]:
    """Independent oracle: direct search over exponent vectors in
    {0..m}^n satisfying the edge constraints, then minimalization."""
    if (m + 1) ** G.n > ENUMERATION_BUDGET:
        raise RuntimeError(f"(m+1)^n = {(m + 1) ** G.n} exceeds enumeration budget")
    covers = [
        exps
        for exps in iter_product(range(m + 1), repeat=G.n)
        if all(exps[i] + exps[j] >= m for i, j in G.edges)
    ]
    return MonomialIdeal(G.n, covers).gens


def is_minimal_mcover(G: Graph, f: Monomial, m: int) -> bool:
    return symbolic_power(G, m).gens.count(f) == 1


@dataclass(frozen=True)
class Cover2Classification:
    """Shape of an indecomposable minimal 2-cover.

    kind "all_ones": the product of all variables of a non-bipartite
    graph.  kind "szt": the (S, T, U) pattern where S holds the
    exponent-0 vertices, T = N(S) the exponent-2 vertices, and U the
    exponent-1 vertices inducing a non-bipartite subgraph without
    isolated vertices.
    """

    kind: str
    S: tuple[int, ...] = ()
    T: tuple[int, ...] = ()
    U: tuple[int, ...] = ()

    @property
    def s(self) -> int:
        return len(self.S)

    @property
    def t(self) -> int:
        return len(self.T)

    @property
    def u(self) -> int:
        return len(self.U)


def classify_indecomposable_2cover(G: Graph, f: Monomial) -> Cover2Classification | None:
    """Classify a minimal 2-cover as indecomposable (with its shape) or
    return None when it decomposes into two 1-covers.

    Raises ValueError if f is not a minimal 2-cover of G.
    """
    if any(e > 2 for e in f.exps):
        return None  # minimal 2-covers have exponents <= 2
    if not is_minimal_mcover(G, f, 2):
        raise ValueError(f"{f} is not a minimal 2-cover of the graph")
    if all(e == 1 for e in f.exps):
        return Cover2Classification("all_ones") if not G.is_bipartite() else None
    S = tuple(i for i, e in enumerate(f.exps) if e == 0)
    T = tuple(i for i, e in enumerate(f.exps) if e == 2)
    U = tuple(i for i, e in enumerate(f.exps) if e == 1)
    if not U:
        return None
    if set(T) != G.neighbors_of_set(S):
        return None
    # g = prod(T) must not be a vertex cover
    g = Monomial(tuple(1 if i in set(T) else 0 for i in range(G.n)))
    if is_m_cover(G, g, 1):
        return None
    induced = G.induced_subgraph(U)
    if induced.has_isolated_vertex() or induced.is_bipartite():
        return None
    return Cover2Classification("szt", S=S, T=T, U=U)


def indecomposability_by_membership(G: Graph, f: Monomial) -> bool:
    """Cross-validation route: a minimal 2-cover is indecomposable iff it
    lies outside the ordinary square of the cover ideal."""
    return not ordinary_power(G, 2).contains(f)


def product_of_all_variables(G: Graph) -> Monomial:
    return all_ones(G.n)
