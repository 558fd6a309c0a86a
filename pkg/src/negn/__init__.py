"""Exact N <-> -N duality checks for stable sequences of SU(N) representations."""
from ._kernels import BACKEND
from .duality import (
    CheckReport,
    check_classic,
    check_constant_term,
    check_prop1,
    check_prop2,
    check_z2,
    exhaustive_corpus,
    random_corpus,
)
from .invariants import (
    casimir_cross_term,
    casimir_direct,
    casimir_formula,
    dim_hook,
    dim_polynomial,
    dim_stable,
    dim_weyl_oracle,
)
from .laurent import LaurentPoly, N, interpolate
from .partitions import RunDecomposition, YoungDiagram, from_runs, runs, transpose
from .stable import DynkinLabels, StableRep, n_min, realize, realized_young

__version__ = "0.1.0"
