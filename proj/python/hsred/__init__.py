"""Hilbert-space reduction renormalization for H0 + g H1 on the spin ladder."""

from ._hsred import (
    Boundary,
    CouplingHamiltonian,
    CrossingReport,
    EigenOptions,
    EigenResult,
    Error,
    FixedPointCheck,
    GapPoint,
    LadderConfig,
    ReductionOptions,
    ReductionStep,
    ReductionTrajectory,
    RootMethod,
    ScanParameter,
    ScanSpec,
    accuracy_loss,
    build_ladder,
    dense_spectrum,
    energy_per_site,
    enumerate_sector,
    fixed_point_drift,
    ground_entropy,
    lowest_k,
    reduce,
    run_reduction,
    scan_crossing,
    sector_size,
)

__all__ = [name for name in dir() if not name.startswith("_")]


def error_code(exc):
    """Machine-readable code of an ``Error`` raised by the core."""
    return exc.args[0] if exc.args else None
