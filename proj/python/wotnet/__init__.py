"""Signed, timestamped trust-rating network analysis."""

from ._core import (
    EventLog,
    IngestError,
    Layer,
    LayerView,
    NodeMetrics,
    RatingEvent,
    WeightedEdge,
    __version__,
    avg_neighbor_degree,
    burstiness,
    categorize,
    circadian_profile,
    configuration_null,
    daily_series,
    extended_jaccard,
    gettrust,
    gini,
    gini_series,
    ingest_file,
    ingest_text,
    interevent_times,
    kendall_tau_b,
    local_clustering,
    mean_clustering,
    node_metrics,
    run,
    set_jaccard,
    spearman,
    split_layers,
    synth_log,
    topk_stability,
    weekly_profile,
    yearly_burstiness,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
