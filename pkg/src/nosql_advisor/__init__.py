"""Decision-support toolkit for NoSQL technology selection.

Covers the full analysis pipeline over a curated dataset of 80 NoSQL
solutions: bivariate feature statistics, k-modes cluster classification, and
per-application-area suitability prediction served through a CLI, an HTTP API
and an interactive UI.
"""

__version__ = "0.1.0"

from .dataset import (  # noqa: F401
    AREA_NAMES,
    FEATURE_NAMES,
    FeatureMatrix,
    SolutionRecord,
    feature_frequencies,
    load_canonical,
    load_dataset,
    project,
    validate_dataset,
)
