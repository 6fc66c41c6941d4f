"""Command-line front end for the analysis pipeline and the advisor.

Exit codes: 0 on success, 1 when validation or an analysis step fails,
2 on a usage error.  The dataset path can be overridden with the
``NOSQL_ADVISOR_DATASET`` environment variable or ``--dataset``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import advisor, kmodes, stats
from .dataset import (
    AREA_NAMES,
    FEATURE_NAMES,
    SUBSET_ORDER,
    SUBSETS,
    feature_frequencies,
    load_canonical,
    load_dataset,
    load_published_partition,
    project,
    validate_dataset,
)
from .trees import ForestParams, TreeParams, build_tree, evaluate, split_train_test, train_forest

USAGE_ERROR = 2
FAILURE = 1

PUBLISHED_DT_ACCURACY = {
    "business_intelligence": 86.67,
    "geospatial": 93.33,
    "healthcare": 88.33,
    "life_sciences": 86.67,
    "smart_cities": 78.33,
    "social_network_analysis": 80.00,
}


def _load_matrix(args):
    path = args.dataset or os.environ.get("NOSQL_ADVISOR_DATASET")
    if path:
        return load_dataset(path)
    return load_canonical()


def cmd_validate(args) -> int:
    matrix = _load_matrix(args)
    report = validate_dataset(matrix)
    freqs = feature_frequencies(matrix)
    print(f"records: {len(matrix)}")
    for name in FEATURE_NAMES + AREA_NAMES:
        print(f"  {name}: {freqs[name]}")
    if report:
        for v in report:
            print(f"VIOLATION {v.record_name}: {v.rule}: {v.message}")
        return FAILURE
    print("dataset valid")
    return 0


def cmd_stats(args) -> int:
    matrix = _load_matrix(args)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rho = stats.pairwise_matrix(matrix, stats.SPEARMAN_RHO)
    pval = stats.pairwise_matrix(matrix, stats.CHI_SQUARE_P)
    chi = stats.pairwise_matrix(matrix, stats.CHI_SQUARE_STAT)
    stats.export_heatmap(rho, out / "spearman.csv", out / "spearman.svg")
    stats.export_heatmap(pval, out / "chi_square_p.csv", out / "chi_square_p.svg")
    stats.export_heatmap(chi, out / "chi_square_stat.csv")
    moderate = stats.moderate_pairs(rho)
    significant = stats.significant_pairs(pval)
    print(f"pairs with |rho| >= {stats.MODERATE_RHO_THRESHOLD}: {len(moderate)}")
    for x, y, v in moderate:
        print(f"  {x} / {y}: {v:+.4f}")
    print(f"pairs with p < {stats.SIGNIFICANCE_LEVEL}: {len(significant)}")
    for x, y, v in significant:
        print(f"  {x} / {y}: p={v:.4g}")
    print(f"wrote heatmaps to {out}")
    return 0


def cmd_scan(args) -> int:
    matrix = _load_matrix(args)
    report = kmodes.cluster_count_scan(matrix)
    csv_text = report.to_csv()
    if args.out:
        Path(args.out).write_text(csv_text, encoding="utf-8")
        print(f"wrote scan grid to {args.out}")
    else:
        print(csv_text, end="")
    print(report.selection_note)
    return 0


def cmd_cluster(args) -> int:
    matrix = _load_matrix(args)
    if args.config not in SUBSET_ORDER:
        print(f"unknown config {args.config!r}; choose from {SUBSET_ORDER}", file=sys.stderr)
        return USAGE_ERROR
    projected = project(matrix, SUBSETS[args.config])
    model = kmodes.kmodes_fit(projected, args.k)
    print(f"k={args.k} config={args.config} sizes={list(model.sizes)} "
          f"cost={model.cost} iterations={model.iterations}")
    profiles = kmodes.summarize_clusters(
        model, projected.rows, matrix.names, SUBSETS[args.config].column_names
    )
    for p in profiles:
        cues = "; ".join(p.characterization) or "mixed"
        print(f"  cluster {p.cluster} (size {p.size}): {cues}")
        print(f"    {', '.join(p.members)}")
    if args.k == kmodes.SELECTED_CLUSTER_COUNT and args.config == "All":
        published = load_published_partition(matrix)
        agreement = kmodes.compare_partitions(published, model.assignment)
        print(f"agreement with the published six-class composition: "
              f"rand={agreement['rand_index']:.4f} "
              f"adjusted_rand={agreement['adjusted_rand_index']:.4f}")
    return 0


def cmd_train(args) -> int:
    matrix = _load_matrix(args)
    bundle = advisor.train_bundle(matrix, seed=args.seed)
    if args.bundle_out:
        advisor.save_bundle(bundle, args.bundle_out)
        print(f"wrote bundle (seed {bundle.seed}) to {args.bundle_out}")
    for area in AREA_NAMES:
        print(f"  {area}: held-out accuracy {bundle.accuracy[area]:.4f}")
    if args.report:
        _seed_report(matrix, args.seeds)
    return 0


def _seed_report(matrix, n_seeds: int) -> None:
    """Mean/stddev accuracy over seeded splits, against the published values."""
    rows = [tuple(r.features) for r in matrix.records]
    print(f"accuracy over {n_seeds} seeded 75/25 splits "
          "(decision tree vs random forest, test fold and train fold):")
    header = f"  {'area':26s} {'DT test':>8s} {'DT train':>9s} {'RF test':>8s} {'RF train':>9s} {'published DT':>13s}"
    print(header)
    for area in AREA_NAMES:
        column = matrix.area_column(area)
        dt_te, dt_tr, rf_te, rf_tr = [], [], [], []
        for seed in range(n_seeds):
            split = split_train_test(len(rows), seed=seed)
            tr = [rows[i] for i in split.train_indices]
            te = [rows[i] for i in split.test_indices]
            ytr = [int(column[i]) for i in split.train_indices]
            yte = [int(column[i]) for i in split.test_indices]
            tree = build_tree(tr, ytr)
            forest = train_forest(tr, ytr, seed=seed)
            dt_te.append(evaluate(tree, te, yte))
            dt_tr.append(evaluate(tree, tr, ytr))
            rf_te.append(evaluate(forest, te, yte))
            rf_tr.append(evaluate(forest, tr, ytr))

        def ms(vals):
            mean = sum(vals) / len(vals)
            var = sum((v - mean) ** 2 for v in vals) / len(vals)
            return 100 * mean, 100 * var ** 0.5

        mte, ste = ms(dt_te)
        mtr, strn = ms(dt_tr)
        rte, _ = ms(rf_te)
        rtr, _ = ms(rf_tr)
        print(f"  {area:26s} {mte:7.2f}% {mtr:8.2f}% {rte:7.2f}% {rtr:8.2f}% {PUBLISHED_DT_ACCURACY[area]:12.2f}%")


def _parse_features(text: str) -> list[int]:
    bits = text.strip()
    if len(bits) != len(FEATURE_NAMES) or any(c not in "01" for c in bits):
        raise ValueError(
            f"--features expects {len(FEATURE_NAMES)} bits in the order: "
            + ",".join(FEATURE_NAMES)
        )
    return [int(c) for c in bits]


def cmd_predict(args) -> int:
    try:
        features = _parse_features(args.features)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    bundle = advisor.load_bundle(args.bundle) if args.bundle else advisor.load_canonical_bundle()
    report = advisor.predict_all(bundle, features)
    if args.json:
        payload = [
            {
                "area": v.area,
                "verdict": v.verdict,
                "path": [{"feature": f, "present": p} for f, p in v.path],
                "leaf_counts": list(v.leaf_counts),
            }
            for v in report.verdicts
        ]
        print(json.dumps({"features": features, "verdicts": payload}, indent=2))
        return 0
    shown = ", ".join(n for n, v in zip(FEATURE_NAMES, features) if v) or "(none)"
    print(f"features set: {shown}")
    for v in report.verdicts:
        steps = " -> ".join(
            f"{name}={'present' if present else 'absent'}" for name, present in v.path
        ) or "(single leaf)"
        counts = f"{v.leaf_counts[1]} suitable / {v.leaf_counts[0]} not in training leaf"
        print(f"  {v.area:26s} {v.verdict:12s} via {steps} [{counts}]")
    return 0


def cmd_serve(args) -> int:
    from .service import create_app
    import uvicorn

    app = create_app(bundle_path=args.bundle, dataset_path=args.dataset, static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nosql-advisor",
        description="Statistics, clustering and per-area suitability advice for 80 NoSQL solutions.",
    )
    parser.add_argument("--dataset", help="path to a dataset CSV (default: packaged canonical file)")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("validate", help="check every record invariant and print feature counts")

    p_stats = sub.add_parser("stats", help="Spearman / chi-square matrices and heatmap exports")
    p_stats.add_argument("--out", default="analysis_out", help="output directory")

    p_scan = sub.add_parser("scan", help="cluster-count scan over n=3..9 and the four feature subsets")
    p_scan.add_argument("--out", help="write the grid CSV here instead of stdout")

    p_cluster = sub.add_parser("cluster", help="fit k-modes and describe the clusters")
    p_cluster.add_argument("--k", type=int, default=6)
    p_cluster.add_argument("--config", default="All", help="All, DMCAP, CAPFP or DMFP")

    p_train = sub.add_parser("train", help="train the advisor bundle and report accuracy")
    p_train.add_argument("--seed", type=int, default=advisor.DEFAULT_BUNDLE_SEED)
    p_train.add_argument("--bundle-out", help="write the trained bundle JSON here")
    p_train.add_argument("--report", action="store_true", help="also print the multi-seed accuracy table")
    p_train.add_argument("--seeds", type=int, default=50, help="number of seeds for --report")

    p_predict = sub.add_parser("predict", help="six per-area verdicts for a feature vector")
    p_predict.add_argument("--features", required=True, help="9 bits, e.g. 100110010")
    p_predict.add_argument("--bundle", help="bundle file (default: packaged canonical bundle)")
    p_predict.add_argument("--json", action="store_true", help="machine-readable output")

    p_serve = sub.add_parser("serve", help="run the HTTP API")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--bundle", help="bundle file (default: packaged canonical bundle)")
    p_serve.add_argument("--static", help="directory of built UI assets to serve at /")

    return parser


COMMANDS = {
    "validate": cmd_validate,
    "stats": cmd_stats,
    "scan": cmd_scan,
    "cluster": cmd_cluster,
    "train": cmd_train,
    "predict": cmd_predict,
    "serve": cmd_serve,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; normalize other exits
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return COMMANDS[args.command](args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILURE


if __name__ == "__main__":
    sys.exit(main())
