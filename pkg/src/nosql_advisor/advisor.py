"""Per-area suitability advisor: train, persist and query six decision trees.

A bundle holds one tree per application area, trained on the seeded 75% fold
of the canonical dataset, together with held-out accuracy and the per-area
forest feature importance computed on the same fold.  Bundles serialize to a
canonical JSON form (sorted keys, compact separators, shortest round-trip
float formatting) so that identical training runs produce identical bytes.
"""

from __future__ import annotations

import importlib.resources
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from .dataset import AREA_NAMES, FEATURE_NAMES, FeatureMatrix
from .trees import (
    LABEL_NAMES,
    ForestModel,
    ForestParams,
    TreeModel,
    TreeParams,
    evaluate,
    build_tree,
    predict,
    split_train_test,
    train_forest,
    tree_from_dict,
    tree_to_dict,
)

BUNDLE_FORMAT_VERSION = 1
DEFAULT_BUNDLE_SEED = 302


class BundleError(ValueError):
    """Corrupt bundle file or unsupported format version."""


@dataclass(frozen=True)
class AreaVerdict:
    area: str
    verdict: str  # "Suitable" | "NotSuitable"
    path: tuple[tuple[str, bool], ...]  # (feature name, feature present)
    leaf_counts: tuple[int, int]  # (NotSuitable, Suitable) training samples at the leaf


@dataclass(frozen=True)
class SuitabilityReport:
    verdicts: tuple[AreaVerdict, ...]

    def by_area(self) -> dict[str, AreaVerdict]:
        return {v.area: v for v in self.verdicts}


@dataclass(frozen=True)
class WhatIfResult:
    toggled_feature: str
    before: SuitabilityReport
    after: SuitabilityReport
    changed_areas: tuple[str, ...]


@dataclass(frozen=True)
class AdvisorBundle:
    models: dict[str, TreeModel]
    dataset_version: str
    seed: int
    params: TreeParams
    accuracy: dict[str, float]          # held-out accuracy per area
    importance: dict[str, tuple[float, ...]]  # forest Gini importance per area
    format_version: int = BUNDLE_FORMAT_VERSION

    def __post_init__(self):
        if tuple(sorted(self.models)) != tuple(sorted(AREA_NAMES)):
            raise BundleError(
                f"bundle must contain exactly the {len(AREA_NAMES)} modeled areas"
            )


def train_bundle(
    matrix: FeatureMatrix,
    params: TreeParams = TreeParams(),
    seed: int = DEFAULT_BUNDLE_SEED,
    forest_params: ForestParams = ForestParams(),
) -> AdvisorBundle:
    """Fit one tree per area on the seeded 75% fold; store held-out accuracy.

    The per-area forest importance (same fold, same seed) is kept alongside so
    that serving layers can surface it without retraining.
    """
    rows = [tuple(r.features) for r in matrix.records]
    split = split_train_test(len(rows), ratio=0.75, seed=seed)
    train_rows = [rows[i] for i in split.train_indices]
    test_rows = [rows[i] for i in split.test_indices]
    models: dict[str, TreeModel] = {}
    accuracy: dict[str, float] = {}
    importance: dict[str, tuple[float, ...]] = {}
    for area in AREA_NAMES:
        try:
            column = matrix.area_column(area)
        except ValueError as exc:
            raise KeyError(f"area column {area!r} missing") from exc
        train_labels = [int(column[i]) for i in split.train_indices]
        test_labels = [int(column[i]) for i in split.test_indices]
        model = build_tree(train_rows, train_labels, params, trained_area=area, training_seed=seed)
        models[area] = model
        accuracy[area] = evaluate(model, test_rows, test_labels)
        forest = train_forest(train_rows, train_labels, forest_params, seed=seed)
        importance[area] = forest.importance
    return AdvisorBundle(
        models=models,
        dataset_version=matrix.version,
        seed=seed,
        params=params,
        accuracy=accuracy,
        importance=importance,
    )


def predict_all(bundle: AdvisorBundle, features: Sequence[int]) -> SuitabilityReport:
    """Evaluate all six trees on a 9-flag feature vector."""
    if len(features) != len(FEATURE_NAMES):
        raise ValueError(f"expected {len(FEATURE_NAMES)} feature flags, got {len(features)}")
    if any(v not in (0, 1) for v in features):
        raise ValueError("feature flags must be 0 or 1")
    verdicts = []
    for area in AREA_NAMES:
        model = bundle.models[area]
        label, path = predict(model, features)
        node = model.root
        for f, present in path:
            node = node.present if present else node.absent
        verdicts.append(
            AreaVerdict(
                area=area,
                verdict=LABEL_NAMES[label],
                path=tuple((FEATURE_NAMES[f], present) for f, present in path),
                leaf_counts=node.class_counts,
            )
        )
    return SuitabilityReport(verdicts=tuple(verdicts))


def what_if(bundle: AdvisorBundle, features: Sequence[int], toggled_feature: int) -> WhatIfResult:
    """Flip one feature flag and report which area verdicts change."""
    if not 0 <= toggled_feature < len(FEATURE_NAMES):
        raise ValueError(f"feature index must be in [0, {len(FEATURE_NAMES)})")
    before = predict_all(bundle, features)
    flipped = list(features)
    flipped[toggled_feature] = 1 - flipped[toggled_feature]
    after = predict_all(bundle, flipped)
    changed = tuple(
        b.area
        for b, a in zip(before.verdicts, after.verdicts)
        if b.verdict != a.verdict
    )
    return WhatIfResult(
        toggled_feature=FEATURE_NAMES[toggled_feature],
        before=before,
        after=after,
        changed_areas=changed,
    )


# ---------------------------------------------------------------------------
# canonical serialization
# ---------------------------------------------------------------------------

def canonical_json(data) -> str:
    """Deterministic JSON: sorted keys, compact separators, newline-terminated.

    Floats use Python's shortest round-trip repr, so equal values always
    produce equal bytes.
    """
    return json.dumps(data, sort_keys=True, separators=(",", ":"), allow_nan=False) + "\n"


def bundle_to_dict(bundle: AdvisorBundle) -> dict:
    return {
        "format_version": bundle.format_version,
        "dataset_version": bundle.dataset_version,
        "seed": bundle.seed,
        "params": {
            "max_depth": bundle.params.max_depth,
            "min_samples_leaf": bundle.params.min_samples_leaf,
        },
        "accuracy": {area: bundle.accuracy[area] for area in AREA_NAMES},
        "importance": {area: list(bundle.importance[area]) for area in AREA_NAMES},
        "models": {area: tree_to_dict(bundle.models[area]) for area in AREA_NAMES},
    }


def bundle_from_dict(data: dict) -> AdvisorBundle:
    if not isinstance(data, dict):
        raise BundleError("bundle document must be a JSON object")
    if data.get("format_version") != BUNDLE_FORMAT_VERSION:
        raise BundleError(f"unsupported format_version {data.get('format_version')!r}")
    models_raw = data.get("models")
    if not isinstance(models_raw, dict):
        raise BundleError("bundle is missing its models map")
    try:
        models = {area: tree_from_dict(doc) for area, doc in models_raw.items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise BundleError(f"malformed tree in bundle: {exc}") from exc
    params = data.get("params", {})
    return AdvisorBundle(
        models=models,
        dataset_version=data.get("dataset_version", ""),
        seed=int(data.get("seed", 0)),
        params=TreeParams(
            max_depth=int(params.get("max_depth", 9)),
            min_samples_leaf=int(params.get("min_samples_leaf", 1)),
        ),
        accuracy={k: float(v) for k, v in data.get("accuracy", {}).items()},
        importance={k: tuple(map(float, v)) for k, v in data.get("importance", {}).items()},
    )


def save_bundle(bundle: AdvisorBundle, path: Path | str) -> None:
    Path(path).write_text(canonical_json(bundle_to_dict(bundle)), encoding="utf-8")


def load_bundle(path: Path | str) -> AdvisorBundle:
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BundleError(f"corrupt bundle file: {exc}") from exc
    return bundle_from_dict(data)


def canonical_bundle_path() -> Path:
    return Path(importlib.resources.files("nosql_advisor").joinpath("data", "advisor_bundle.json"))


def load_canonical_bundle() -> AdvisorBundle:
    return load_bundle(canonical_bundle_path())
