"""Equilibria and simulations of the reputational inflation-policy game
under present-biased discounting."""

from ._core import (
    Action,
    CheckResult,
    Decision,
    DiscountBasis,
    DiscountKind,
    DiscountSpec,
    EquilibriumReport,
    GameParams,
    IoError,
    NarrowingReport,
    NumericalError,
    PeriodRecord,
    PolicymakerProfile,
    PolicymakerType,
    ReportMode,
    ShockKind,
    ShockSpec,
    SweepRow,
    SweepSpec,
    Trajectory,
    TrajectorySummary,
    ValidationError,
    VerifyReport,
    best_cheat,
    best_enforceable_rule,
    classify,
    decide,
    detect_reversal,
    discretionary_equilibrium,
    enforcement,
    enforcement_differential,
    enforcement_under,
    equilibrium_report,
    eval_discount,
    loss,
    narrowing_report,
    one_shot_deviation_value,
    present_value,
    run_sweep,
    run_verify,
    simulate,
    sweep_csv,
    temptation,
)

__all__ = [
    "Action",
    "CheckResult",
    "Decision",
    "DiscountBasis",
    "DiscountKind",
    "DiscountSpec",
    "EquilibriumReport",
    "GameParams",
    "IoError",
    "NarrowingReport",
    "NumericalError",
    "PeriodRecord",
    "PolicymakerProfile",
    "PolicymakerType",
    "ReportMode",
    "ShockKind",
    "ShockSpec",
    "SweepRow",
    "SweepSpec",
    "Trajectory",
    "TrajectorySummary",
    "ValidationError",
    "VerifyReport",
    "best_cheat",
    "best_enforceable_rule",
    "classify",
    "decide",
    "detect_reversal",
    "discretionary_equilibrium",
    "enforcement",
    "enforcement_differential",
    "enforcement_under",
    "equilibrium_report",
    "eval_discount",
    "loss",
    "narrowing_report",
    "one_shot_deviation_value",
    "present_value",
    "run_sweep",
    "run_verify",
    "simulate",
    "sweep_csv",
    "temptation",
]
