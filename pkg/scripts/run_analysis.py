#!/usr/bin/env python3
"""Reproduce the full analysis into an output directory.

Writes: feature frequency table, Spearman/chi-square grids + SVG heatmaps,
the cluster-count scan grid, the k=6 cluster composition with agreement
against the published six classes, and the multi-seed accuracy report.

Usage: python scripts/run_analysis.py [--out analysis_out] [--seeds 50]
"""

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from nosql_advisor import stats
from nosql_advisor.dataset import (
    AREA_NAMES,
    FEATURE_NAMES,
    SUBSETS,
    feature_frequencies,
    load_canonical,
    load_published_partition,
    project,
    validate_dataset,
)
from nosql_advisor.kmodes import (
    adjusted_rand_index,
    cluster_count_scan,
    compare_partitions,
    kmodes_fit,
    summarize_clusters,
)
from nosql_advisor.trees import build_tree, evaluate, split_train_test, train_forest


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="analysis_out")
    parser.add_argument("--seeds", type=int, default=50)
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    matrix = load_canonical()
    violations = validate_dataset(matrix)
    if violations:
        print(f"dataset INVALID: {violations}", file=sys.stderr)
        return 1

    freqs = feature_frequencies(matrix)
    (out / "frequencies.csv").write_text(
        "column,count\n" + "\n".join(f"{k},{v}" for k, v in freqs.items()) + "\n"
    )
    print(f"frequencies -> {out / 'frequencies.csv'}")

    rho = stats.pairwise_matrix(matrix, stats.SPEARMAN_RHO)
    pvals = stats.pairwise_matrix(matrix, stats.CHI_SQUARE_P)
    chi = stats.pairwise_matrix(matrix, stats.CHI_SQUARE_STAT)
    stats.export_heatmap(rho, out / "spearman.csv", out / "spearman.svg")
    stats.export_heatmap(pvals, out / "chi_square_p.csv", out / "chi_square_p.svg")
    stats.export_heatmap(chi, out / "chi_square_stat.csv")
    print(f"moderate correlations (|rho|>=0.4): {stats.moderate_pairs(rho)}")
    print(f"significant pairs (p<0.05): {len(stats.significant_pairs(pvals))}")

    scan = cluster_count_scan(matrix)
    (out / "cluster_scan.csv").write_text(scan.to_csv())
    print(f"cluster scan -> {out / 'cluster_scan.csv'}; {scan.selection_note}")

    view = project(matrix, SUBSETS["All"])
    model = kmodes_fit(view, 6)
    published = load_published_partition(matrix)
    agreement = compare_partitions(published, model.assignment)
    profiles = summarize_clusters(model, view.rows, matrix.names, FEATURE_NAMES)
    doc = {
        "sizes": list(model.sizes),
        "cost": model.cost,
        "agreement_with_published": agreement,
        "clusters": [
            {
                "cluster": p.cluster,
                "size": p.size,
                "characterization": list(p.characterization),
                "members": list(p.members),
            }
            for p in profiles
        ],
    }
    (out / "clusters_k6.json").write_text(json.dumps(doc, indent=2) + "\n")
    print(f"k=6 sizes {model.sizes}, ARI vs published "
          f"{agreement['adjusted_rand_index']:.4f} -> {out / 'clusters_k6.json'}")

    rows = [tuple(r.features) for r in matrix.records]
    lines = ["area,dt_test,dt_train,rf_test,rf_train"]
    for area in AREA_NAMES:
        column = matrix.area_column(area)
        sums = [0.0, 0.0, 0.0, 0.0]
        for seed in range(args.seeds):
            split = split_train_test(len(rows), seed=seed)
            tr = [rows[i] for i in split.train_indices]
            te = [rows[i] for i in split.test_indices]
            ytr = [int(column[i]) for i in split.train_indices]
            yte = [int(column[i]) for i in split.test_indices]
            tree = build_tree(tr, ytr)
            forest = train_forest(tr, ytr, seed=seed)
            sums[0] += evaluate(tree, te, yte)
            sums[1] += evaluate(tree, tr, ytr)
            sums[2] += evaluate(forest, te, yte)
            sums[3] += evaluate(forest, tr, ytr)
        means = [100 * s / args.seeds for s in sums]
        lines.append(f"{area}," + ",".join(f"{v:.2f}" for v in means))
        print(f"{area:26s} DT test {means[0]:6.2f}%  DT train {means[1]:6.2f}%  "
              f"RF test {means[2]:6.2f}%  RF train {means[3]:6.2f}%")
    (out / "accuracy_report.csv").write_text("\n".join(lines) + "\n")
    print(f"accuracy report ({args.seeds} seeds) -> {out / 'accuracy_report.csv'}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
