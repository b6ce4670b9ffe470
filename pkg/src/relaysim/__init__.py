"""Monte Carlo link-level simulator for cooperative relaying strategies
in a smart-grid neighborhood area network."""

from .montecarlo import (
    EmpiricalCdf,
    SummaryStats,
    SweepSpec,
    percentile,
    run_cdf,
    run_point,
    run_sweep,
    run_trial,
)
from .propagation import (
    LinkBudget,
    LinkPower,
    LinkSet,
    build_link_set,
    draw_fading,
    link_sinr,
    path_loss_db,
)
from .scenario import (
    Interferer,
    Position,
    ScenarioConfig,
    ScenarioSample,
    channel_frequency,
    sample_positions,
    trial_stream,
)
from .strategies import (
    ALL_STRATEGIES,
    RateResult,
    StrategyKind,
    af_equivalent_snr,
    evaluate_strategy,
    rate_af_beamform2,
    rate_af_single,
    rate_df_beamform2,
    rate_df_single,
    rate_direct,
    rate_exchange_baseline,
    rate_twoway_af,
    rate_twoway_df,
    twoway_af_snrs,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_STRATEGIES",
    "EmpiricalCdf",
    "Interferer",
    "LinkBudget",
    "LinkPower",
    "LinkSet",
    "Position",
    "RateResult",
    "ScenarioConfig",
    "ScenarioSample",
    "StrategyKind",
    "SummaryStats",
    "SweepSpec",
    "af_equivalent_snr",
    "build_link_set",
    "channel_frequency",
    "draw_fading",
    "evaluate_strategy",
    "link_sinr",
    "path_loss_db",
    "percentile",
    "rate_af_beamform2",
    "rate_af_single",
    "rate_df_beamform2",
    "rate_df_single",
    "rate_direct",
    "rate_exchange_baseline",
    "rate_twoway_af",
    "rate_twoway_df",
    "run_cdf",
    "run_point",
    "run_sweep",
    "run_trial",
    "sample_positions",
    "trial_stream",
    "twoway_af_snrs",
]
