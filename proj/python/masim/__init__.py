"""Closed-form model and deterministic simulator comparing sequential remote
invocation (DNR) with mobile-agent itinerary migration (MA)."""

from ._masim import (
    BagRecord,
    CostParams,
    CrossoverResult,
    RegimeResult,
    RunReport,
    __version__,
    classify_regime,
    comm_crossover,
    cost_crossover,
    dnr_comm_time,
    dnr_invocation_cost,
    ma_comm_time,
    ma_invocation_cost,
    simulate_agent,
    simulate_remoting,
)

__all__ = [
    "BagRecord",
    "CostParams",
    "CrossoverResult",
    "RegimeResult",
    "RunReport",
    "__version__",
    "classify_regime",
    "comm_crossover",
    "cost_crossover",
    "dnr_comm_time",
    "dnr_invocation_cost",
    "ma_comm_time",
    "ma_invocation_cost",
    "simulate_agent",
    "simulate_remoting",
]
