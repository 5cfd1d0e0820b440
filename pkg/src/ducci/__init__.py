"""Periods of the cyclic pairwise-sum (Ducci) map on Z_m^n.

Two independent routes to the same numbers: exhaustive orbit enumeration
(`spectrum`) and algebraic fixed-space counting (`fixed_space`), plus
closed-form periods for special tuple classes (`classify`), permutation
symmetries of period classes (`symmetry`), transition-graph components
(`graph`), and a checker suite for the known period tables (`checks`).
"""

from .core import (
    BudgetExceeded,
    CompositeModulus,
    DucciError,
    EmptyClass,
    NotApplicable,
    NotFixed,
    Params,
    RingElement,
    SpectrumMismatch,
    Tuple,
    coeff_row,
    ducci_apply,
    ducci_step,
    iterate,
    ring_mul,
    ring_pow,
    rotate,
    tuple_from_index,
)
from .cycles import (
    CycleInfo,
    MaxPeriodRecord,
    PeriodCache,
    exact_period_of_fixed,
    find_cycle,
    max_period,
    multiplicative_order,
)
from .classify import TupleClass, classify, sum_triple_period, uniform_period
from .fixed_space import (
    CirculantSystem,
    FixedSpace,
    SpectrumAlgebraic,
    algebraic_spectrum,
    build_system,
    int_determinant,
    nullspace,
    pattern_matrix,
)
from .spectrum import (
    ComparisonReport,
    SpectrumReport,
    brute_spectrum,
    class_filter,
    spectrum_compare,
)
from .symmetry import GroupReport, identify_small_group, stabilizer
from .graph import TransitionGraph, component_of, export_dot, predecessors
from .checks import CheckResult, SuiteOptions, run_suite

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CompositeModulus",
    "DucciError",
    "EmptyClass",
    "NotApplicable",
    "NotFixed",
    "Params",
    "RingElement",
    "SpectrumMismatch",
    "Tuple",
    "coeff_row",
    "ducci_apply",
    "ducci_step",
    "iterate",
    "ring_mul",
    "ring_pow",
    "rotate",
    "tuple_from_index",
    "CycleInfo",
    "MaxPeriodRecord",
    "PeriodCache",
    "exact_period_of_fixed",
    "find_cycle",
    "max_period",
    "multiplicative_order",
    "TupleClass",
    "classify",
    "sum_triple_period",
    "uniform_period",
    "CirculantSystem",
    "FixedSpace",
    "SpectrumAlgebraic",
    "algebraic_spectrum",
    "build_system",
    "int_determinant",
    "nullspace",
    "pattern_matrix",
    "ComparisonReport",
    "SpectrumReport",
    "brute_spectrum",
    "class_filter",
    "spectrum_compare",
    "GroupReport",
    "identify_small_group",
    "stabilizer",
    "TransitionGraph",
    "component_of",
    "export_dot",
    "predecessors",
    "CheckResult",
    "SuiteOptions",
    "run_suite",
]
