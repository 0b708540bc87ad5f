"""Complexity measures over ingested datasets: feature-space dimensionality,
zero-fraction sparsity, per-image entropy, per-channel and per-class Gini,
and boxplot-style class summaries.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .datasets import LabeledImageDataset, TabularDataset
from .errors import DegenerateInput, InvalidParameter
from .measures import (
    ANALYTIC,
    MeasureResult,
    gini,
    histogram,
    log10_product,
    shannon_entropy,
)


def feature_space_dimensionality(dataset: LabeledImageDataset) -> float:
    """log10 of pixels x channels x classes x pixel values x images."""
    return log10_product(
        [
            dataset.pixel_count,
            dataset.channel_count,
            dataset.class_count,
            dataset.pixel_value_count,
            dataset.image_count,
        ]
    )


def image_zero_sparsity(image: np.ndarray) -> float:
    """Fraction of zero-valued pixels; 1 minus the nonzero fraction."""
    arr = np.asarray(image)
    if arr.size == 0:
        raise DegenerateInput("empty image")
    return 1.0 - np.count_nonzero(arr) / arr.size


def image_entropy(
    image: np.ndarray, bin_count: int = 256, binarize_first: bool = False
) -> MeasureResult:
    """Normalized entropy of pixel intensities over [0, 255].

    Multi-channel images pool every channel value into one histogram.
    binarize_first sends nonzero pixels to 255 first, so mass lands in the
    first and last bins only.
    """
    arr = np.asarray(image)
    if arr.size == 0:
        raise DegenerateInput("empty image")
    values = arr.reshape(-1)
    if binarize_first:
        values = np.where(values > 0, 255, 0)
    hist = histogram(values, bin_count, (0.0, 255.0))
    value = shannon_entropy(hist.probabilities()) / np.log2(bin_count)
    mode = "binarized to bins 0 and 255" if binarize_first else "raw intensities"
    return MeasureResult(
        measure_name="image_entropy",
        value=float(value),
        convention=(
            f"{mode}; {bin_count} equal bins over [0, 255]; all channels pooled; "
            f"event_count = {bin_count}"
        ),
        provenance=ANALYTIC,
    )


def channel_gini(image: np.ndarray, channel: int) -> float:
    """Gini index over one channel plane of an H x W x C image."""
    arr = np.asarray(image)
    if arr.ndim == 2:
        arr = arr[:, :, None]
    if arr.ndim != 3:
        raise InvalidParameter("expected an H x W x C image")
    if not 0 <= channel < arr.shape[2]:
        raise InvalidParameter(f"channel {channel} outside 0..{arr.shape[2] - 1}")
    return gini(arr[:, :, channel].reshape(-1).astype(float))


def _resolve(name_or_index, names: tuple[str, ...], kind: str) -> int:
    if isinstance(name_or_index, str):
        try:
            return names.index(name_or_index)
        except ValueError:
            raise InvalidParameter(f"unknown {kind} {name_or_index!r}") from None
    index = int(name_or_index)
    if not 0 <= index < len(names):
        raise InvalidParameter(f"{kind} index {index} outside 0..{len(names) - 1}")
    return index


def tabular_gini(dataset: TabularDataset, class_ref, feature_ref) -> float:
    """Gini over the raw values of one (class, feature) cell."""
    class_index = _resolve(class_ref, dataset.class_names, "class")
    feature_index = _resolve(feature_ref, dataset.feature_names, "feature")
    values = dataset.features[dataset.labels == class_index, feature_index]
    if len(values) < 2:
        raise DegenerateInput("class needs at least two rows")
    return gini(values)


def _midpoint_quartiles(sorted_values: np.ndarray) -> tuple[float, float, float]:
    """Median and Tukey hinges: the median joins both halves when N is odd."""
    n = len(sorted_values)
    median = float(np.median(sorted_values))
    half = n // 2
    lower = sorted_values[: half + (n % 2)]
    upper = sorted_values[half:]
    return float(np.median(lower)), median, float(np.median(upper))


@dataclass(frozen=True)
class ClassSummary:
    """Boxplot-style five-number summary for one class."""

    class_name: str
    count: int
    mean: float
    median: float
    q1: float
    q3: float
    whisker_low: float
    whisker_high: float
    outlier_count: int


def summarize_class(values, class_name: str) -> ClassSummary:
    arr = np.sort(np.asarray(values, dtype=float))
    if arr.size == 0:
        raise DegenerateInput(f"class {class_name!r} has no values")
    q1, median, q3 = _midpoint_quartiles(arr)
    iqr = q3 - q1
    fence_low = q1 - 1.5 * iqr
    fence_high = q3 + 1.5 * iqr
    outliers = int(((arr < fence_low) | (arr > fence_high)).sum())
    return ClassSummary(
        class_name=class_name,
        count=int(arr.size),
        mean=float(arr.mean()),
        median=median,
        q1=q1,
        q3=q3,
        whisker_low=float(max(fence_low, arr[0])),
        whisker_high=float(min(fence_high, arr[-1])),
        outlier_count=outliers,
    )


def summarize_by_class(
    per_item_values, labels, class_names: tuple[str, ...]
) -> list[ClassSummary]:
    """Group values by label and summarize each class; empty classes are
    skipped with a warning."""
    values = np.asarray(per_item_values, dtype=float)
    label_arr = np.asarray(labels)
    if len(values) != len(label_arr):
        raise InvalidParameter("values and labels must align")
    summaries = []
    for index, name in enumerate(class_names):
        members = values[label_arr == index]
        if members.size == 0:
            warnings.warn(f"class {name!r} has no members; omitted", stacklevel=2)
            continue
        summaries.append(summarize_class(members, name))
    return summaries


def median_of_medians(summaries: list[ClassSummary]) -> float:
    if not summaries:
        raise DegenerateInput("no class summaries to aggregate")
    return float(np.median([s.median for s in summaries]))
