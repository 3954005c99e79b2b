"""Symbolic powers, symbolic defects, and asymptotic invariants of cover
ideals of finite simple graphs."""

from .asymptotics import (
    NoFitError,
    QuasiPolynomial,
    WaldschmidtReport,
    fit_quasipolynomial,
    jacobian_rank_full,
    mu_growth_degree,
    resurgence_lower_bound,
    sdefect_degree,
    waldschmidt,
    waldschmidt_general,
)
from .covers import (
    Cover2Classification,
    classify_indecomposable_2cover,
    cover_ideal,
    enumerate_minimal_mcovers,
    is_m_cover,
    minimal_mcovers,
    ordinary_power,
    symbolic_power,
)
from .graphs import Graph, complete, cycle, parse_family, path, triangle_tail
from .monomials import (
    AmbientMismatchError,
    GeneratorCapExceeded,
    Monomial,
    MonomialIdeal,
    ZeroIdealError,
    all_ones,
    minimalize,
    set_generator_cap,
    unit_monomial,
)
from .sdefect import (
    PreconditionError,
    SdefectReport,
    check_indecomposability_conditions,
    check_indecomposability_exhaustive,
    nu,
    sdefect_brute,
    sdefect_cycle,
    sdefect_recursive,
    staircase_ideal,
    verify_triangle_tail,
)

__version__ = "0.1.0"

__all__ = [
    "AmbientMismatchError",
    "Cover2Classification",
    "GeneratorCapExceeded",
    "Graph",
    "Monomial",
    "MonomialIdeal",
    "NoFitError",
    "PreconditionError",
    "QuasiPolynomial",
    "SdefectReport",
    "WaldschmidtReport",
    "ZeroIdealError",
    "all_ones",
    "check_indecomposability_conditions",
    "check_indecomposability_exhaustive",
    "classify_indecomposable_2cover",
    "complete",
    "cover_ideal",
    "cycle",
    "enumerate_minimal_mcovers",
    "fit_quasipolynomial",
    "is_m_cover",
    "jacobian_rank_full",
    "minimal_mcovers",
    "minimalize",
    "mu_growth_degree",
    "nu",
    "ordinary_power",
    "parse_family",
    "path",
    "resurgence_lower_bound",
    "sdefect_brute",
    "sdefect_cycle",
    "sdefect_degree",
    "sdefect_recursive",
    "set_generator_cap",
    "staircase_ideal",
    "symbolic_power",
    "triangle_tail",
    "unit_monomial",
    "verify_triangle_tail",
    "waldschmidt",
    "waldschmidt_general",
]
