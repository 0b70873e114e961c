"""Correlation quantifiers of two-qubit Bell-diagonal and X states."""

from qcorr._core import (
    QcorrError,
    XState,
    apply_channel,
    bd_to_density,
    bd_to_xstate,
    bell_eigenvalues,
    classify_region,
    closest_classical,
    closest_separable_hs,
    closest_separable_trace_xfamily,
    concurrence,
    critical_times,
    density_to_bd,
    evolved_vector,
    hs_discord,
    hs_discord_from_entanglement,
    hs_entanglement,
    is_physical,
    run_trajectory,
    trace_discord,
    trace_discord_from_concurrence,
    verify,
    wootters_concurrence,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
