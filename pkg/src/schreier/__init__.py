"""Exact counting and enumeration of min-constrained set families.

A family member at n is a finite set F of positive integers with
max F = n whose minimum is large relative to its size: q·min F ≥ p·|F|
for a fixed ratio p/q.  The package computes family sizes three
independent ways (brute force, a linear recurrence, a direct binomial
sum), exposes the structure-preserving maps that justify the
recurrence, and cross-checks the companion interval-family count
against Turán graph edge counts.  All arithmetic is exact.
"""

from .bfile import BFile, bfile_from_sequence, parse_bfile
from .bijections import (
    DomainError,
    GapSet,
    IEDecomposition,
    attach_window,
    collapse_gaps,
    expand_gaps,
    gap_window,
    inclusion_exclusion_decomposition,
    relabeling_table,
    strip_window,
)
from .counting import (
    Count,
    CountSequence,
    binomial,
    count_schreier_direct,
    count_schreier_recurrence,
    schreier_sequence,
)
from .enumeration import (
    ORACLE_LIMIT,
    FamilyListing,
    OracleLimitError,
    count_interval_bruteforce,
    count_schreier_bruteforce,
    enumerate_interval_family,
    enumerate_schreier,
)
from .sets import (
    FiniteSet,
    Ratio,
    in_schreier_family,
    is_generalized_schreier,
    is_interval,
)
from .turan import (
    IntervalCountParams,
    TuranIdentityReport,
    TuranSpec,
    balanced_part_sizes,
    interval_count_closed,
    interval_count_sum,
    turan_edges_construction,
    turan_edges_formula,
    verify_turan_identity,
)
from .verify import (
    VerifyReport,
    formula_suite,
    gap_bijection_suite,
    interval_agreement_suite,
    recurrence_suite,
    run_suite,
    scale_invariance_suite,
    turan_cross_suite,
    turan_identity_suite,
    window_bijection_suite,
)

__version__ = "0.1.0"

__all__ = [
    "BFile",
    "Count",
    "CountSequence",
    "DomainError",
    "FamilyListing",
    "FiniteSet",
    "GapSet",
    "IEDecomposition",
    "IntervalCountParams",
    "ORACLE_LIMIT",
    "OracleLimitError",
    "Ratio",
    "TuranIdentityReport",
    "TuranSpec",
    "VerifyReport",
    "attach_window",
    "balanced_part_sizes",
    "bfile_from_sequence",
    "binomial",
    "collapse_gaps",
    "count_interval_bruteforce",
    "count_schreier_bruteforce",
    "count_schreier_direct",
    "count_schreier_recurrence",
    "enumerate_interval_family",
    "enumerate_schreier",
    "expand_gaps",
    "formula_suite",
    "gap_bijection_suite",
    "gap_window",
    "in_schreier_family",
    "inclusion_exclusion_decomposition",
    "interval_agreement_suite",
    "interval_count_closed",
    "interval_count_sum",
    "is_generalized_schreier",
    "is_interval",
    "parse_bfile",
    "recurrence_suite",
    "relabeling_table",
    "run_suite",
    "scale_invariance_suite",
    "schreier_sequence",
    "strip_window",
    "turan_cross_suite",
    "turan_edges_construction",
    "turan_edges_formula",
    "turan_identity_suite",
    "verify_turan_identity",
    "window_bijection_suite",
]
