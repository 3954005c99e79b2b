"""Symbolic-defect computation: brute force, the recursive formula for
graphs with a unique extra 2-cover generator, the odd-cycle recursion,
and indecomposability checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement

from .covers import cover_ideal, ordinary_power, symbolic_power
from .graphs import Graph, cycle, path, triangle_tail
from .monomials import Monomial, MonomialIdeal, all_ones

MAX_M = 12


class PreconditionError(ValueError):
    """A required hypothesis failed; the computation refuses to run."""

    def __init__(self, hypothesis: str):
        super().__init__(f"hypothesis failed: {hypothesis}")
        self.hypothesis = hypothesis


@dataclass(frozen=True)
class SdefectReport:
    graph: str
    m: int
    value: int
    method: str
    witnesses: tuple[Monomial, ...] = ()


def _graph_id(G: Graph) -> str:
    return f"graph(n={G.n}, edges={len(G.edges)})"


def _check_m(m: int) -> None:
    if m > MAX_M:
        raise ValueError(f"m={m} exceeds the configured cap {MAX_M}")


def sdefect_brute(G: Graph, m: int) -> SdefectReport:
    """Count minimal generators of the m-th symbolic power that miss the
    m-th ordinary power.

    A minimal monomial generator of I^(m) never lies in the irrelevant
    multiple of I^(m), and monomial membership splits over sums, so this
    count equals the minimal generator count of I^(m)/I^m.
    """
    if m < 1:
        raise ValueError("sdefect needs m >= 1")
    _check_m(m)
    sym = symbolic_power(G, m)
    ordinary = ordinary_power(G, m)
    inside = ordinary.contains_each(sym.gens)
    witnesses = tuple(g for g, hit in zip(sym.gens, inside) if not hit)
    return SdefectReport(_graph_id(G), m, len(witnesses), "brute", witnesses)


def nu(I: MonomialIdeal, m: int, F: Monomial) -> int:
    """Number of minimal generators of I^m not divisible by F.

    The m = 0 case returns 1 (the unit generator, never divisible by a
    positive-degree F) and m = 1 returns mu(I) whenever F divides no
    generator, matching the seeding conventions of the recursion.
    """
    if m < 0:
        raise ValueError("nu needs m >= 0")
    P = I.power(m)
    return sum(1 for g in P.gens if not F.divides(g))


@dataclass(frozen=True)
class IndecomposabilityCertificate:
    condition: int | None  # 1, 2, 3 or None
    alphas: tuple[int, ...] = ()
    variables: tuple[int, ...] = ()  # 0-based witnessing variables


def check_indecomposability_conditions(G: Graph) -> IndecomposabilityCertificate:
    """Check the three sufficient generator-shape conditions under which
    no product F^k g_{i_1} ... g_{i_s} falls into the ordinary power."""
    I = cover_ideal(G)
    degs = sorted(set(I.generator_degrees()))
    deg_F = G.n
    if len(degs) == 1:
        a = degs[0]
        if deg_F < 2 * a:
            return IndecomposabilityCertificate(1, (a,))
        return IndecomposabilityCertificate(None, (a,))
    if len(degs) == 2:
        a1, a2 = degs
        if deg_F < a1 + a2:
            low = [g for g in I.gens if g.degree == a1]
            high = [g for g in I.gens if g.degree == a2]
            for j in range(G.n):
                if all(g.exps[j] for g in low) and not any(h.exps[j] for h in high):
                    return IndecomposabilityCertificate(2, (a1, a2), (j,))
            shared = tuple(
                j
                for j in range(G.n)
                if all(h.exps[j] for h in high) and not any(g.exps[j] for g in low)
            )
            if a2 - a1 <= len(shared) and shared:
                return IndecomposabilityCertificate(3, (a1, a2), shared)
        return IndecomposabilityCertificate(None, (a1, a2))
    return IndecomposabilityCertificate(None, tuple(degs))


@dataclass(frozen=True)
class IndecomposabilityCounterexample:
    k: int
    factors: tuple[Monomial, ...]  # the s cover-ideal generators used
    product: Monomial
    decomposition: tuple[Monomial, ...] = ()


def _decompose(I: MonomialIdeal, target: Monomial, count: int) -> tuple[Monomial, ...] | None:
    """Write target as a product of `count` generators of I, if possible."""
    if count == 0:
        return () if target.degree == 0 else None
    for g in I.gens:
        if g.degree * count > target.degree:
            break  # gens sorted by degree ascending
        if g.divides(target):
            rest = Monomial(tuple(a - b for a, b in zip(target.exps, g.exps)))
            sub = _decompose(I, rest, count - 1)
            if sub is not None:
                return (g,) + sub
    return None


def check_indecomposability_exhaustive(
    G: Graph, k_max: int = 3, s_max: int = 3
) -> tuple[bool, IndecomposabilityCounterexample | None]:
    """Test every product F^k g_{i_1} ... g_{i_s} (1 <= k <= k_max,
    0 <= s <= s_max) for membership in the ordinary (2k+s)-th power.

    Returns (True, None) when no product falls in, otherwise (False,
    counterexample), including a factorization of the product into
    2k + s generators when one exists.
    """
    I = cover_ideal(G)
    F = all_ones(G.n)
    for k in range(1, k_max + 1):
        Fk = F ** k
        for s in range(0, s_max + 1):
            m = 2 * k + s
            _check_m(m)
            power_m = ordinary_power(G, m)
            for combo in combinations_with_replacement(I.gens, s):
                prod = Fk
                for g in combo:
                    prod = prod * g
                if power_m.contains(prod):
                    witness = _decompose(I, prod, m) or ()
                    return False, IndecomposabilityCounterexample(k, combo, prod, witness)
    return True, None


def has_unique_extra_2cover(G: Graph) -> bool:
    """sdefect(J(G), 2) == 1, by brute force."""
    return sdefect_brute(G, 2).value == 1


def _recursion_values(G: Graph, m: int, star: MonomialIdeal | None = None) -> int:
    """sdefect via sdefect(m) = sdefect(m-2) + nu(., m-2), seeded with
    sdefect(1) = 0 and sdefect(2) = 1."""
    I = star if star is not None else cover_ideal(G)
    F = all_ones(G.n)
    seeds = {1: 0, 2: 1}
    if m in seeds:
        return seeds[m]
    value = seeds[2 - (m % 2)] if m % 2 == 0 else seeds[1]
    low = 2 if m % 2 == 0 else 1
    for mm in range(low + 2, m + 1, 2):
        value += nu(I, mm - 2, F)
    return value


def sdefect_recursive(G: Graph, m: int, unchecked: bool = False) -> SdefectReport:
    """Symbolic defect via the recursion for graphs whose only extra
    2-cover is the product of all variables.

    Preconditions (checked unless `unchecked`): sdefect(J(G), 2) == 1 and
    indecomposability evidence, either one of the three sufficient
    generator-shape conditions or a bounded exhaustive product check
    covering all products relevant up to m.  With `unchecked`, the value
    is computed anyway and tagged, for cross-method mismatch reporting.
    """
    if m < 1:
        raise ValueError("sdefect needs m >= 1")
    _check_m(m)
    method = "recursion"
    if not has_unique_extra_2cover(G):
        raise PreconditionError("sdefect(J(G), 2) == 1")
    if not unchecked:
        cert = check_indecomposability_conditions(G)
        if cert.condition is None:
            k_max = max(m // 2, 1)
            ok, counter = check_indecomposability_exhaustive(G, k_max, max(m - 2, 0))
            if not ok:
                raise PreconditionError(
                    "Indecomposability Property: "
                    f"F^{counter.k} * {'*'.join(map(str, counter.factors)) or '1'}"
                    f" lies in the ordinary power of exponent {2 * counter.k + len(counter.factors)}"
                )
            method = "recursion(exhaustive-check)"
    else:
        method = "recursion-unchecked"
    return SdefectReport(_graph_id(G), m, _recursion_values(G, m), method)


@lru_cache(maxsize=None)
def staircase_ideal(n: int) -> MonomialIdeal:
    """For odd n, the ideal generated by the n staircase 1-covers
    g_i = x_i x_{i+2} ... x_{i+n-1} (indices mod n) of the n-cycle."""
    if n < 3 or n % 2 == 0:
        raise ValueError("staircase ideal is defined for odd n >= 3")
    gens = []
    for i in range(n):
        exps = [0] * n
        for step in range((n + 1) // 2):
            exps[(i + 2 * step) % n] = 1
        gens.append(tuple(exps))
    return MonomialIdeal(n, gens)


def sdefect_cycle(n: int, m: int) -> SdefectReport:
    """Symbolic defect of the odd n-cycle via the recursion driven by the
    staircase ideal (equal to the cover ideal for n <= 7)."""
    if n < 3 or n % 2 == 0:
        raise ValueError("cycle recursion needs odd n >= 3")
    if m < 1:
        raise ValueError("sdefect needs m >= 1")
    _check_m(m)
    G = cycle(n)
    value = _recursion_values(G, m, star=staircase_ideal(n))
    return SdefectReport(_graph_id(G), m, value, "cycle-recursion")


@dataclass(frozen=True)
class TriangleTailReport:
    n: int
    left: int  # sdefect(J(T_n), 2)
    previous: int  # sdefect(J(T_{n-1}), 2)
    right_by_convention: dict = field(hash=False, default_factory=dict)
    convention: str | None = None  # which path-size reading makes it hold

    @property
    def holds(self) -> bool:
        return self.convention is not None


def verify_triangle_tail(n: int) -> TriangleTailReport:
    """Check sdefect(J(T_n), 2) = sdefect(J(T_{n-1}), 2) + mu(J(P)^2)
    with P read either as a path with n-4 edges or with n-4 vertices.

    Both sides are computed by brute force; the report names the
    convention under which equality holds.
    """
    if n < 5:
        raise ValueError("the recursion needs n >= 5; compute sdefect directly below that")
    left = sdefect_brute(triangle_tail(n), 2).value
    previous = sdefect_brute(triangle_tail(n - 1), 2).value
    rights = {}
    for convention, vertices in (("edges", n - 3), ("vertices", n - 4)):
        if vertices < 1:
            continue
        P = path(vertices)
        rights[convention] = previous + ordinary_power(P, 2).mu()
    held = [c for c, v in rights.items() if v == left]
    return TriangleTailReport(n, left, previous, rights, held[0] if held else None)
