"""Anomaly detection for temporal complex networks via intuitionistic fuzzy
set ensembles.

The heavy lifting lives in the compiled ``ifsad._core`` extension; this
package simply re-exports it.
"""

from ._core import (  # noqa: F401
    CharacteristicMatrix,
    Classification,
    ClusterConfig,
    ConfigError,
    DetectionModel,
    EvalMetrics,
    Fuzzifier,
    IfsTriple,
    InputError,
    ModelError,
    Partition,
    PipelineConfig,
    Polarity,
    Ranking,
    Snapshot,
    build_snapshot,
    characteristic_names,
    characteristics_of,
    classify,
    classify_matrix,
    classify_single,
    compute_characteristics,
    eccentricity_profile,
    evaluate,
    fit_partition,
    ifwg_fuse,
    interval_of,
    load_characteristic_csv,
    load_edge_stream,
    make_fuzzifier,
    nonmembership,
    precision,
    rank,
    score,
    sweep_cluster_size,
    train,
    variable_names,
    write_characteristic_csv,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
