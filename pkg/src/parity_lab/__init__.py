"""Exact even/odd/cyclic analysis of polynomial and rational-function compositions."""

from .bivariate import (
    BiPoly,
    bipoly_is_even,
    is_homogeneous,
    is_symmetric,
    odd_homogeneous_components,
    restrict_line,
    subst_uni,
    theorem_pqr_assert,
)
from .cyclic import (
    PrimeModulus,
    composition_class,
    numeric_omega_check,
    proposition_c_assert,
    right_cyclic_classify,
    self_composition_assert,
    shift_decompose,
    theorem_f_a_assert,
)
from .explorer import (
    Family,
    SearchConfig,
    SearchReport,
    Theorem,
    run_theorem_suite,
    search_open_q1,
    search_open_q2,
)
from .outcomes import Status, Verdict, VerificationReport
from .parity import (
    Case,
    Target,
    build_witness,
    classify_rpe,
    classify_rpo,
    power_parity_check,
    theorem_eo_demo,
    verify_witness_numeric,
)
from .parser import ParseError, parse_expr
from .poly import (
    ZERO_DEGREE,
    CyclicClass,
    CyclicKind,
    UniPoly,
    compose,
    cyclic_class,
    eval_complex,
    even_odd_parts,
    reflect,
)
from .rational import RationalFunction, rf_compose, rf_cyclic_class, rf_new

__version__ = "0.1.0"
