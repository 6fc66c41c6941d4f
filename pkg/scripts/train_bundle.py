#!/usr/bin/env python3
"""Retrain the advisor bundle and (optionally) replace the packaged artifact.

The packaged bundle is trained with a fixed seed so the CLI, the API and the
UI are deterministic out of the box.  Retraining with the same seed must
reproduce the committed file byte for byte.

Usage: python scripts/train_bundle.py [--seed 302] [--out path] [--commit]
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from nosql_advisor.advisor import canonical_bundle_path, save_bundle, train_bundle
from nosql_advisor.dataset import AREA_NAMES, FEATURE_NAMES, load_canonical


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=302)
    parser.add_argument("--out", default="advisor_bundle.json")
    parser.add_argument(
        "--commit", action="store_true",
        help="write to the packaged data directory instead of --out",
    )
    args = parser.parse_args()

    bundle = train_bundle(load_canonical(), seed=args.seed)
    target = canonical_bundle_path() if args.commit else Path(args.out)
    save_bundle(bundle, target)
    print(f"bundle (seed {bundle.seed}) -> {target}")
    for area in AREA_NAMES:
        imp = bundle.importance[area]
        top = FEATURE_NAMES[imp.index(max(imp))]
        print(f"  {area:26s} held-out accuracy {bundle.accuracy[area]:.2f}  "
              f"top importance: {top}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
