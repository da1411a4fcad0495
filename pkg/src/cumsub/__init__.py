"""Exact solver and experiment harness for cumulative subtraction games."""

from .analysis import (
    ConvergenceReport,
    ObservationReport,
    PeriodReport,
    SacrificeFinding,
    TheoremViolationError,
    check_nonincreasing_actions,
    check_observation_last_move,
    check_observation_one_greedy,
    conjecture_report,
    convergence_bound,
    convergence_point,
    default_x_max,
    eventual_period,
    observation_sweep_report,
    sacrifice_conjecture_report,
    scan_sacrifice_conjecture,
)
from .closed_form import (
    FullSupportSolution,
    TwoActionSolution,
    build_two_action,
    complementary_next,
    full_support_opt,
    full_support_outcome,
    two_action_opt,
    two_action_outcome,
    two_action_xi,
)
from .core import (
    HEAP_LIMIT,
    Move,
    Mover,
    OutcomeTable,
    PlayTrace,
    Position,
    Ruleset,
    build_outcome_table,
    canonical_trace,
    is_sacrifice,
    minimax_oracle,
    minimax_values,
    opt_action,
    rulesets_with_max_at_most,
)
from .multipile import (
    GridOutcome,
    LinePeriodReport,
    build_grid,
    column_period,
    diagonal_period,
    export_grid,
    periodicity_reports,
    read_grid_csv,
    row_period,
    two_pile_minimax,
)
from .truncated import (
    DualityConjectureReport,
    DualityTheoremReport,
    TruncationProfile,
    check_duality_conjecture,
    check_duality_theorem,
    duality_conjecture_report,
    sweep_truncated,
    tr_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "HEAP_LIMIT",
    "ConvergenceReport",
    "DualityConjectureReport",
    "DualityTheoremReport",
    "FullSupportSolution",
    "GridOutcome",
    "LinePeriodReport",
    "Move",
    "Mover",
    "ObservationReport",
    "OutcomeTable",
    "PeriodReport",
    "PlayTrace",
    "Position",
    "Ruleset",
    "SacrificeFinding",
    "TheoremViolationError",
    "TruncationProfile",
    "TwoActionSolution",
    "build_grid",
    "build_outcome_table",
    "build_two_action",
    "canonical_trace",
    "check_duality_conjecture",
    "check_duality_theorem",
    "check_nonincreasing_actions",
    "check_observation_last_move",
    "check_observation_one_greedy",
    "column_period",
    "complementary_next",
    "conjecture_report",
    "convergence_bound",
    "convergence_point",
    "default_x_max",
    "diagonal_period",
    "duality_conjecture_report",
    "eventual_period",
    "export_grid",
    "full_support_opt",
    "full_support_outcome",
    "is_sacrifice",
    "minimax_oracle",
    "minimax_values",
    "observation_sweep_report",
    "opt_action",
    "periodicity_reports",
    "read_grid_csv",
    "row_period",
    "rulesets_with_max_at_most",
    "sacrifice_conjecture_report",
    "scan_sacrifice_conjecture",
    "sweep_truncated",
    "tr_sequence",
    "two_action_opt",
    "two_action_outcome",
    "two_action_xi",
    "two_pile_minimax",
]
