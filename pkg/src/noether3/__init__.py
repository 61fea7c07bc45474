"""Exact lattice cohomology and decision procedures for monomial Noether problems."""

__version__ = "0.1.0"

from .certify import Certificate, certify_negativity
from .cohomology import (
    Cocycle,
    CohomologyResult,
    TestOutcome,
    adjoin_trivializer,
    check_cocycle,
    h1,
    is_coboundary,
    is_cocycle,
    is_tate_trivial,
    make_cocycle,
    nonvanishing_test,
    subgroup_h1_table,
    tate_minus1,
)
from .errors import *  # noqa: F401,F403
from .groups import (
    FiniteMatrixGroup,
    LatticeAction,
    all_subgroups,
    close_group,
    lattice_action,
    restrict_action,
)
from .lattice import (
    IntMatrix,
    QuotientStructure,
    kernel_basis,
    quotient_invariants,
    row_space_basis,
    smith_normal_form,
    solve_left,
)
from .noether import ProblemInstance, Verdict, decide_group, decide_R, decide_R1R2, instance
from .parity import invariant_sublattice, norm_sum, parity_test_refined, parity_test_simple, replay_certificate
from .registry import paper_module
from .squareclass import in_minus4_fourth_powers, multiquadratic_degree, square_class
