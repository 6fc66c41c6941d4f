"""From-scratch CART decision trees and random forests over binary features.

Labels are binary: 1 = Suitable, 0 = NotSuitable.  Splits maximize the
weighted Gini decrease; a feature is never reused along a root-to-leaf path
(a binary feature is exhausted after one split).  All randomness flows through
seeded SplitMix64 streams (see :mod:`nosql_advisor.rng`), with one sub-stream
per forest tree fixed in advance, so training is reproducible and
concurrency-safe.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

from .rng import FOREST_STREAM, SPLIT_STREAM, SplitMix64, stream

SUITABLE = 1
NOT_SUITABLE = 0
LABEL_NAMES = {SUITABLE: "Suitable", NOT_SUITABLE: "NotSuitable"}
LABEL_VALUES = {v: k for k, v in LABEL_NAMES.items()}

N_FEATURES = 9
TREE_FORMAT_VERSION = 1

_EPS = 1e-12


class MalformedTreeError(ValueError):
    """Structural problem in a tree, e.g. a feature repeated along a path."""


@dataclass(frozen=True)
class Leaf:
    label: int
    sample_count: int
    class_counts: tuple[int, int]  # (NotSuitable, Suitable)


@dataclass(frozen=True)
class Internal:
    feature_index: int
    absent: "TreeNode"   # feature value 0
    present: "TreeNode"  # feature value 1
    sample_count: int
    gini_decrease: float


TreeNode = Union[Leaf, Internal]


@dataclass(frozen=True)
class TreeParams:
    max_depth: int = 9
    min_samples_leaf: int = 1


@dataclass(frozen=True)
class ForestParams:
    n_trees: int = 100
    features_per_split: int = 3
    bootstrap: bool = True


@dataclass(frozen=True)
class TreeModel:
    root: TreeNode
    params: TreeParams
    trained_area: str = ""
    training_seed: Optional[int] = None


@dataclass(frozen=True)
class ForestModel:
    trees: tuple[TreeModel, ...]
    importance: tuple[float, ...]
    params: ForestParams
    seed: int


@dataclass(frozen=True)
class SplitSpec:
    train_indices: tuple[int, ...]
    test_indices: tuple[int, ...]


def gini(labels: Sequence[int]) -> float:
    """Two-class Gini impurity, 1 - sum of squared class proportions."""
    n = len(labels)
    if n == 0:
        raise ValueError("gini undefined for an empty label multiset")
    ones = sum(labels)
    p1 = ones / n
    p0 = 1.0 - p1
    return 1.0 - p0 * p0 - p1 * p1


def _gini_counts(c0: int, c1: int) -> float:
    n = c0 + c1
    p1 = c1 / n
    p0 = c0 / n
    return 1.0 - p0 * p0 - p1 * p1


def best_split(
    rows: np.ndarray, labels: np.ndarray, candidate_features: Sequence[int]
) -> Optional[tuple[int, float]]:
    """Feature with the largest weighted-Gini decrease, or None.

    Candidates are examined in ascending index order, so ties go to the lowest
    feature index.  A zero-decrease split on a non-constant feature is still
    accepted (Gini is concave, so the weighted child impurity never exceeds
    the parent); rejecting those would make parity patterns like XOR
    unlearnable even with unlimited depth.  Returns None only when every
    candidate is constant within the node.
    """
    n = len(labels)
    if n < 2:
        return None
    total1 = int(labels.sum())
    parent = _gini_counts(n - total1, total1)
    ones = rows.sum(axis=0)
    ones1 = labels @ rows
    best_f, best_dec = None, -1.0
    for f in sorted(candidate_features):
        n1 = int(ones[f])
        n0 = n - n1
        if n1 == 0 or n0 == 0:
            continue
        c1_present = int(ones1[f])
        c1_absent = total1 - c1_present
        weighted = (
            n0 * _gini_counts(n0 - c1_absent, c1_absent)
            + n1 * _gini_counts(n1 - c1_present, c1_present)
        ) / n
        decrease = parent - weighted
        if decrease > best_dec + _EPS:
            best_f, best_dec = f, decrease
    if best_f is None:
        return None
    return best_f, max(best_dec, 0.0)


def _leaf(labels: np.ndarray) -> Leaf:
    n = len(labels)
    ones = int(labels.sum())
    zeros = n - ones
    # majority label; ties fall to NotSuitable
    label = SUITABLE if ones > zeros else NOT_SUITABLE
    return Leaf(label=label, sample_count=n, class_counts=(zeros, ones))


def _grow(
    rows: np.ndarray,
    labels: np.ndarray,
    params: TreeParams,
    depth: int,
    used: frozenset[int],
    rng: Optional[SplitMix64],
    features_per_split: Optional[int],
) -> TreeNode:
    n = len(labels)
    ones = int(labels.sum())
    if ones in (0, n) or depth >= params.max_depth or n < 2 * params.min_samples_leaf:
        return _leaf(labels)
    candidates = [f for f in range(rows.shape[1]) if f not in used]
    if rng is not None and features_per_split is not None and len(candidates) > features_per_split:
        pool = list(candidates)
        rng.shuffle(pool)
        candidates = pool[:features_per_split]
    found = best_split(rows, labels, candidates)
    if found is None:
        return _leaf(labels)
    f, decrease = found
    mask = rows[:, f] == 1
    n1 = int(mask.sum())
    n0 = n - n1
    if n0 < params.min_samples_leaf or n1 < params.min_samples_leaf:
        return _leaf(labels)
    absent = _grow(rows[~mask], labels[~mask], params, depth + 1, used | {f}, rng, features_per_split)
    present = _grow(rows[mask], labels[mask], params, depth + 1, used | {f}, rng, features_per_split)
    return Internal(
        feature_index=f,
        absent=absent,
        present=present,
        sample_count=n,
        gini_decrease=decrease,
    )


def build_tree(
    rows: Sequence[Sequence[int]],
    labels: Sequence[int],
    params: TreeParams = TreeParams(),
    trained_area: str = "",
    training_seed: Optional[int] = None,
) -> TreeModel:
    """Recursive CART over binary features; deterministic, no feature sampling."""
    X = np.asarray(rows, dtype=np.int64)
    y = np.asarray(labels, dtype=np.int64)
    if len(y) == 0:
        raise ValueError("cannot train on an empty set")
    root = _grow(X, y, params, depth=0, used=frozenset(), rng=None, features_per_split=None)
    return TreeModel(root=root, params=params, trained_area=trained_area, training_seed=training_seed)


def predict(model: TreeModel, features: Sequence[int]) -> tuple[int, list[tuple[int, bool]]]:
    """Follow present/absent edges; returns the label and the path traversed.

    The path lists (feature_index, feature_was_present) pairs in order.  A
    feature repeated along the path indicates a malformed tree.
    """
    node = model.root
    path: list[tuple[int, bool]] = []
    seen: set[int] = set()
    while isinstance(node, Internal):
        f = node.feature_index
        if f in seen:
            raise MalformedTreeError(f"feature {f} repeats along the decision path")
        seen.add(f)
        present = bool(features[f])
        path.append((f, present))
        node = node.present if present else node.absent
    return node.label, path


def predict_label(model: TreeModel, features: Sequence[int]) -> int:
    return predict(model, features)[0]


def split_train_test(n: int, ratio: float = 0.75, seed: int = 0) -> SplitSpec:
    """Seeded uniform shuffle; the first ceil(ratio * n) indices train."""
    if not 0 < ratio < 1:
        raise ValueError("ratio must be strictly between 0 and 1")
    if n < 2:
        raise ValueError("need at least two records to split")
    indices = list(range(n))
    stream(seed, SPLIT_STREAM).shuffle(indices)
    cut = math.ceil(ratio * n)
    return SplitSpec(train_indices=tuple(indices[:cut]), test_indices=tuple(indices[cut:]))


def train_forest(
    rows: Sequence[Sequence[int]],
    labels: Sequence[int],
    params: ForestParams = ForestParams(),
    seed: int = 0,
    tree_params: TreeParams = TreeParams(),
) -> ForestModel:
    """Bag of CART trees on bootstrap resamples with per-split feature sampling.

    Tree b draws everything from ``stream(seed, FOREST_STREAM, b)``: first the
    bootstrap indices, then the feature subsets in recursion (pre-)order.
    """
    X = np.asarray(rows, dtype=np.int64)
    y = np.asarray(labels, dtype=np.int64)
    if len(y) == 0:
        raise ValueError("cannot train on an empty set")
    n = len(y)
    trees = []
    for b in range(params.n_trees):
        rng = stream(seed, FOREST_STREAM, b)
        if params.bootstrap:
            boot = rng.below_array(n, n)
            Xb, yb = X[boot], y[boot]
        else:
            Xb, yb = X, y
        root = _grow(
            Xb, yb, tree_params, depth=0, used=frozenset(),
            rng=rng, features_per_split=params.features_per_split,
        )
        trees.append(TreeModel(root=root, params=tree_params, training_seed=seed))
    importance = _forest_importance(trees, n_features=X.shape[1])
    return ForestModel(trees=tuple(trees), importance=importance, params=params, seed=seed)


def _forest_importance(trees: Sequence[TreeModel], n_features: int) -> tuple[float, ...]:
    raw = [0.0] * n_features

    def walk(node: TreeNode, total: int) -> None:
        if isinstance(node, Internal):
            raw[node.feature_index] += (node.sample_count / total) * node.gini_decrease
            walk(node.absent, total)
            walk(node.present, total)

    for t in trees:
        walk(t.root, t.root.sample_count)
    s = sum(raw)
    if s == 0.0:
        return tuple(raw)
    return tuple(v / s for v in raw)


def gini_importance(forest: ForestModel) -> tuple[float, ...]:
    """Per-feature share of sample-weighted impurity decrease, summing to 1."""
    return forest.importance


def forest_predict(forest: ForestModel, features: Sequence[int]) -> int:
    """Majority vote over the trees; an exact tie falls to NotSuitable."""
    votes = sum(predict_label(t, features) for t in forest.trees)
    return SUITABLE if votes * 2 > len(forest.trees) else NOT_SUITABLE


def evaluate(model: Union[TreeModel, ForestModel], rows: Sequence[Sequence[int]], labels: Sequence[int]) -> float:
    """Fraction of correct predictions on the given set."""
    if len(labels) == 0:
        raise ValueError("cannot evaluate on an empty set")
    if isinstance(model, ForestModel):
        memo: dict[tuple[int, ...], int] = {}

        def pred(x: Sequence[int]) -> int:
            key = tuple(x)
            if key not in memo:
                memo[key] = forest_predict(model, key)
            return memo[key]
    else:
        def pred(x: Sequence[int]) -> int:
            return predict_label(model, x)
    correct = sum(1 for x, lab in zip(rows, labels) if pred(x) == lab)
    return correct / len(labels)


# ---------------------------------------------------------------------------
# serialization: versioned JSON-compatible nested nodes
# ---------------------------------------------------------------------------

def node_to_dict(node: TreeNode) -> dict:
    if isinstance(node, Leaf):
        return {
            "label": LABEL_NAMES[node.label],
            "counts": [node.class_counts[0], node.class_counts[1]],
        }
    return {
        "feature": node.feature_index,
        "absent": node_to_dict(node.absent),
        "present": node_to_dict(node.present),
        "samples": node.sample_count,
        "decrease": node.gini_decrease,
    }


def node_from_dict(data: dict) -> TreeNode:
    if "label" in data:
        counts = data.get("counts", [0, 0])
        if data["label"] not in LABEL_VALUES:
            raise MalformedTreeError(f"unknown label {data['label']!r}")
        return Leaf(
            label=LABEL_VALUES[data["label"]],
            sample_count=int(counts[0]) + int(counts[1]),
            class_counts=(int(counts[0]), int(counts[1])),
        )
    for key in ("feature", "absent", "present"):
        if key not in data:
            raise MalformedTreeError(f"internal node missing {key!r}")
    return Internal(
        feature_index=int(data["feature"]),
        absent=node_from_dict(data["absent"]),
        present=node_from_dict(data["present"]),
        sample_count=int(data.get("samples", 0)),
        gini_decrease=float(data.get("decrease", 0.0)),
    )


def tree_to_dict(model: TreeModel) -> dict:
    return {
        "format_version": TREE_FORMAT_VERSION,
        "area": model.trained_area,
        "seed": model.training_seed,
        "params": {"max_depth": model.params.max_depth, "min_samples_leaf": model.params.min_samples_leaf},
        "root": node_to_dict(model.root),
    }


def tree_from_dict(data: dict) -> TreeModel:
    if data.get("format_version") != TREE_FORMAT_VERSION:
        raise MalformedTreeError(f"unsupported tree format_version {data.get('format_version')!r}")
    params = data.get("params", {})
    return TreeModel(
        root=node_from_dict(data["root"]),
        params=TreeParams(
            max_depth=int(params.get("max_depth", 9)),
            min_samples_leaf=int(params.get("min_samples_leaf", 1)),
        ),
        trained_area=data.get("area", ""),
        training_seed=data.get("seed"),
    )


def forest_to_dict(forest: ForestModel) -> dict:
    return {
        "format_version": TREE_FORMAT_VERSION,
        "seed": forest.seed,
        "params": {
            "n_trees": forest.params.n_trees,
            "features_per_split": forest.params.features_per_split,
            "bootstrap": forest.params.bootstrap,
        },
        "importance": list(forest.importance),
        "trees": [tree_to_dict(t) for t in forest.trees],
    }


def forest_from_dict(data: dict) -> ForestModel:
    if data.get("format_version") != TREE_FORMAT_VERSION:
        raise MalformedTreeError(f"unsupported forest format_version {data.get('format_version')!r}")
    params = data.get("params", {})
    return ForestModel(
        trees=tuple(tree_from_dict(t) for t in data["trees"]),
        importance=tuple(float(v) for v in data["importance"]),
        params=ForestParams(
            n_trees=int(params.get("n_trees", 100)),
            features_per_split=int(params.get("features_per_split", 3)),
            bootstrap=bool(params.get("bootstrap", True)),
        ),
        seed=int(data.get("seed", 0)),
    )
