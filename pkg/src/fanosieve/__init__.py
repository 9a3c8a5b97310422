"""fanosieve: exact-rational classification of non-Gorenstein Q-factorial
canonical Fano threefold degrees above 66, and a weighted projective space
calculator for the extremal example."""

from .arith import (
    Rational,
    factorize,
    format_rational,
    is_rational_square,
    lcm_list,
    parse_rational,
    square_divisors,
)
from .baskets import Basket, BasketPoint, DegreeCandidate, degree_candidates, h0_from_degree
from .classify import ClassificationReport, SurvivorRow, run_case_analysis
from .curves import (
    CurveConfig,
    CurveType,
    curve_config_search,
    extremal_case_audit,
    torsion_square_exclusion,
    torsion_square_values,
)
from .filters import FilterConstants, IndexedCase, Reason, prime_power_sum
from .report import RunConfig, TableArtifact, all_artifacts, diff_against_golden
from .sieve import Regime, SieveRow, build_case_table, enumerate_baskets, enumerate_rx_multisets
from .wps import (
    QuotientPoint,
    SingularityClass,
    WeightedP3,
    anticanonical_degree,
    basket_consistency,
    h0_monomials,
    reid_tai,
    singular_strata,
    weil_index,
)

__version__ = "0.1.0"
