"""HTTP API serving the dataset, analytics and the trained advisor.

All handlers share immutable state loaded at startup (dataset, bundle, and
lazily computed analytics), so concurrent requests need no coordination and
responses are deterministic for a given bundle.  Every non-success response
carries exactly one error object ``{"error": {"code", "message", "detail"}}``.
"""

from __future__ import annotations

import math
from functools import lru_cache
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from . import advisor, kmodes, stats
from .dataset import (
    AREA_NAMES,
    FEATURE_NAMES,
    SUBSET_ORDER,
    SUBSETS,
    FeatureMatrix,
    load_canonical,
    load_dataset,
    project,
    provenance_path,
)


class ApiError(Exception):
    def __init__(self, code: str, message: str, detail: Optional[str] = None, status: int = 400):
        super().__init__(message)
        self.code = code
        self.message = message
        self.detail = detail
        self.status = status


class PredictRequest(BaseModel):
    features: list[int] = Field(..., description="9 binary feature flags")


class WhatIfRequest(BaseModel):
    features: list[int]
    toggle: int = Field(..., description="index of the feature to flip")


def _check_features(features: list[int]) -> list[int]:
    if len(features) != len(FEATURE_NAMES) or any(v not in (0, 1) for v in features):
        raise ApiError(
            code="bad_feature_vector",
            message=f"features must be {len(FEATURE_NAMES)} flags, each 0 or 1",
            detail="features",
        )
    return features


def _verdict_payload(report: advisor.SuitabilityReport) -> list[dict]:
    return [
        {
            "area": v.area,
            "verdict": v.verdict,
            "path": [{"feature": f, "present": present} for f, present in v.path],
            "leaf_counts": {"NotSuitable": v.leaf_counts[0], "Suitable": v.leaf_counts[1]},
        }
        for v in report.verdicts
    ]


def create_app(
    bundle_path: Optional[Path | str] = None,
    dataset_path: Optional[Path | str] = None,
    static_dir: Optional[Path | str] = None,
) -> FastAPI:
    """Build the service around one immutable bundle and dataset."""
    matrix = load_dataset(dataset_path, provenance_path() if dataset_path is None else None) \
        if dataset_path else load_canonical()
    bundle = advisor.load_bundle(bundle_path) if bundle_path else advisor.load_canonical_bundle()

    app = FastAPI(title="nosql-advisor", version="0.1.0")

    @app.exception_handler(ApiError)
    async def api_error_handler(_: Request, exc: ApiError):
        body = {"error": {"code": exc.code, "message": exc.message}}
        if exc.detail is not None:
            body["error"]["detail"] = exc.detail
        return JSONResponse(status_code=exc.status, content=body)

    @app.exception_handler(Exception)
    async def fallback_handler(_: Request, exc: Exception):
        return JSONResponse(
            status_code=500,
            content={"error": {"code": "internal", "message": str(exc)}},
        )

    def meta() -> dict:
        return {"dataset_version": bundle.dataset_version, "bundle_seed": bundle.seed}

    @app.get("/api/solutions")
    def solutions():
        return {
            **meta(),
            "feature_names": list(FEATURE_NAMES),
            "area_names": list(AREA_NAMES),
            "solutions": [
                {
                    "name": r.name,
                    "features": list(r.features),
                    "areas": list(r.areas),
                    "notes": list(r.notes),
                }
                for r in matrix.records
            ],
        }

    @app.get("/api/solutions/{name}")
    def solution(name: str):
        try:
            r = matrix.record(name)
        except KeyError:
            raise ApiError("unknown_solution", f"no solution named {name!r}", status=404)
        return {
            **meta(),
            "name": r.name,
            "features": list(r.features),
            "areas": list(r.areas),
            "notes": list(r.notes),
        }

    def _assoc_payload(kind: str) -> dict:
        a = stats.pairwise_matrix(matrix, kind)
        values = [
            [None if math.isnan(v) else v for v in row]
            for row in a.values.tolist()
        ]
        return {**meta(), "kind": kind, "feature_names": list(a.feature_names), "values": values}

    @lru_cache(maxsize=None)
    def _assoc_cached(kind: str) -> dict:
        return _assoc_payload(kind)

    @app.get("/api/stats/spearman")
    def spearman():
        return _assoc_cached(stats.SPEARMAN_RHO)

    @app.get("/api/stats/chisquare")
    def chisquare():
        return {
            "p_values": _assoc_cached(stats.CHI_SQUARE_P),
            "statistics": _assoc_cached(stats.CHI_SQUARE_STAT),
        }

    @lru_cache(maxsize=None)
    def _clusters_cached(k: int, config: str) -> dict:
        model = kmodes.kmodes_fit(project(matrix, SUBSETS[config]), k)
        profiles = kmodes.summarize_clusters(
            model,
            project(matrix, SUBSETS[config]).rows,
            matrix.names,
            SUBSETS[config].column_names,
        )
        return {
            **meta(),
            "k": k,
            "config": config,
            "sizes": list(model.sizes),
            "cost": model.cost,
            "iterations": model.iterations,
            "clusters": [
                {
                    "cluster": p.cluster,
                    "size": p.size,
                    "mode": list(p.mode),
                    "support": list(p.support),
                    "members": list(p.members),
                    "characterization": list(p.characterization),
                }
                for p in profiles
            ],
        }

    @app.get("/api/clusters")
    def clusters(k: int = 6, config: str = "All"):
        if config not in SUBSET_ORDER:
            raise ApiError("unknown_config", f"config must be one of {SUBSET_ORDER}", detail="config")
        if not 1 <= k <= 40:
            raise ApiError("bad_cluster_count", "k must be between 1 and 40", detail="k")
        return _clusters_cached(k, config)

    @app.get("/api/importance/{area}")
    def importance(area: str):
        if area not in AREA_NAMES:
            raise ApiError("unknown_area", f"no area named {area!r}", status=404)
        return {
            **meta(),
            "area": area,
            "feature_names": list(FEATURE_NAMES),
            "importance": list(bundle.importance[area]),
        }

    @app.get("/api/tree/{area}")
    def tree(area: str):
        if area not in AREA_NAMES:
            raise ApiError("unknown_area", f"no area named {area!r}", status=404)
        from .trees import tree_to_dict

        return {**meta(), "area": area, "accuracy": bundle.accuracy[area],
                "tree": tree_to_dict(bundle.models[area])}

    @app.post("/api/predict")
    def predict(req: PredictRequest):
        features = _check_features(req.features)
        report = advisor.predict_all(bundle, features)
        return {**meta(), "features": features, "verdicts": _verdict_payload(report)}

    @app.post("/api/whatif")
    def whatif(req: WhatIfRequest):
        features = _check_features(req.features)
        if not 0 <= req.toggle < len(FEATURE_NAMES):
            raise ApiError("bad_toggle_index", f"toggle must be in [0, {len(FEATURE_NAMES)})", detail="toggle")
        result = advisor.what_if(bundle, features, req.toggle)
        return {
            **meta(),
            "toggled_feature": result.toggled_feature,
            "before": _verdict_payload(result.before),
            "after": _verdict_payload(result.after),
            "changed_areas": list(result.changed_areas),
        }

    if static_dir is None:
        default_static = Path(__file__).resolve().parent.parent.parent / "frontend" / "dist"
        static_dir = default_static if default_static.is_dir() else None
    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app
