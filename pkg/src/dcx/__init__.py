"""Domain complexity estimation.

Measures the size and difficulty of action domains (board games,
control problems, resource games) and perception domains (image and
tabular datasets) along three families: dimensionality (how big the
space is), sparsity (how rare success or signal is), and diversity
(how spread out the content is).
"""

from .cartpole import (
    CartPoleParams,
    RolloutConfig,
    analytic_sparsity,
    constant_action_limit,
    params_for_variant,
    rollout_entropy,
)
from .dataset_metrics import (
    ClassSummary,
    channel_gini,
    feature_space_dimensionality,
    image_entropy,
    image_zero_sparsity,
    median_of_medians,
    summarize_by_class,
    tabular_gini,
)
from .datasets import (
    LabeledImageDataset,
    TabularDataset,
    binarize,
    load_cifar10,
    load_iris,
    load_mnist,
    parse_cifar10,
    parse_idx,
    parse_iris_csv,
)
from .descriptors import (
    BreakdownElement,
    Component,
    DomainDescriptor,
    InformationBreakdown,
    bundled_breakdown,
    bundled_descriptor,
    environment_space_bound,
    game_space_complexity,
    information_entropy,
    load_breakdown,
    load_descriptor,
    path_sparsity_bound,
    state_space_complexity,
    strategy_entropy,
    tree_complexity,
)
from .errors import (
    DcxError,
    DegenerateInput,
    FormatError,
    InvalidAction,
    InvalidDistribution,
    InvalidParameter,
    InvalidValue,
    ResourceLimit,
    TruncatedInput,
)
from .games import (
    GridGameSpec,
    enumerate_states,
    gtc_factorial,
    ply_entropy,
    preset,
    ssc_combinatorial,
    ssc_upper_bound,
    win_lines,
)
from .measures import (
    Histogram,
    MeasureResult,
    Provenance,
    gini,
    gtc_power,
    histogram,
    log10_product,
    normalized_entropy,
    shannon_entropy,
)
from .report import ComplexityReport, ReferenceTarget, compare, from_json, to_json

__version__ = "0.1.0"

__all__ = [
    "CartPoleParams",
    "ClassSummary",
    "Component",
    "ComplexityReport",
    "BreakdownElement",
    "DcxError",
    "DegenerateInput",
    "DomainDescriptor",
    "FormatError",
    "GridGameSpec",
    "Histogram",
    "InformationBreakdown",
    "InvalidAction",
    "InvalidDistribution",
    "InvalidParameter",
    "InvalidValue",
    "LabeledImageDataset",
    "MeasureResult",
    "Provenance",
    "ReferenceTarget",
    "ResourceLimit",
    "RolloutConfig",
    "TabularDataset",
    "TruncatedInput",
    "analytic_sparsity",
    "binarize",
    "bundled_breakdown",
    "bundled_descriptor",
    "channel_gini",
    "compare",
    "constant_action_limit",
    "enumerate_states",
    "environment_space_bound",
    "feature_space_dimensionality",
    "from_json",
    "game_space_complexity",
    "gini",
    "gtc_factorial",
    "gtc_power",
    "histogram",
    "image_entropy",
    "image_zero_sparsity",
    "information_entropy",
    "load_breakdown",
    "load_cifar10",
    "load_descriptor",
    "load_iris",
    "load_mnist",
    "log10_product",
    "median_of_medians",
    "normalized_entropy",
    "params_for_variant",
    "parse_cifar10",
    "parse_idx",
    "parse_iris_csv",
    "path_sparsity_bound",
    "ply_entropy",
    "preset",
    "rollout_entropy",
    "shannon_entropy",
    "ssc_combinatorial",
    "ssc_upper_bound",
    "state_space_complexity",
    "strategy_entropy",
    "summarize_by_class",
    "tabular_gini",
    "to_json",
    "tree_complexity",
    "win_lines",
]
