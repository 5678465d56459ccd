"""Trajectory-based representation and data-driven simulation of LTI and
Hammerstein-Wiener systems.

The heavy lifting lives in the compiled extension ``trajkit._core``; this
package re-exports its public surface.
"""

from trajkit._core import (
    ArgumentError,
    BasisSet,
    DDSimProblem,
    DDSimResult,
    Example1Config,
    Example1Run,
    HankelMatrix,
    InitialStateEstimate,
    JunctionReport,
    Kernel,
    MembershipResult,
    NoiseDistribution,
    NoiseSpec,
    ObservabilityError,
    PersistenceReport,
    RecoveryError,
    Signal,
    SimulationResult,
    StateSpaceModel,
    Trajectory,
    TrajectoryBasis,
    TrajectoryParseError,
    WeaveError,
    WeavePlan,
    WeaveSolution,
    add_multiplicative_noise,
    assemble,
    check_weave_constraints,
    ddsim_exact,
    ddsim_kernel,
    ddsim_regularized,
    example1_model,
    gram,
    hankel,
    is_persistently_exciting,
    kernel_eval,
    lift_input,
    lift_output,
    max_horizon,
    objective_value,
    parse_trajectory_csv,
    reconstruct_initial_state,
    relative_rms_error,
    run_example1,
    simulate,
    solve_weave,
    state_consistency_check,
    write_trajectory_csv,
)

__all__ = [name for name in dir() if not name.startswith("_")]
