#!/usr/bin/env python3
"""Capture CLI and API outputs into the frontend test fixtures.

Run after retraining the committed bundle so the UI tests keep asserting
against the real system's responses.
"""

import io
import json
import sys
from contextlib import redirect_stdout
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from fastapi.testclient import TestClient

from nosql_advisor.cli import main as cli_main
from nosql_advisor.service import create_app

VECTORS = ("100110010", "110110010", "000000000")


def main() -> int:
    client = TestClient(create_app())
    fixtures = {}
    for vector in VECTORS:
        feats = [int(c) for c in vector]
        api = client.post("/api/predict", json={"features": feats}).json()
        buf = io.StringIO()
        with redirect_stdout(buf):
            assert cli_main(["predict", "--features", vector, "--json"]) == 0
        fixtures[vector] = {"api": api, "cli": json.loads(buf.getvalue())}
    fixtures["importance_healthcare"] = client.get("/api/importance/healthcare").json()
    fixtures["tree_geospatial"] = client.get("/api/tree/geospatial").json()
    fixtures["spearman"] = client.get("/api/stats/spearman").json()

    target = Path(__file__).resolve().parent.parent / "frontend" / "test" / "fixtures.ts"
    text = (
        "// Captured from the running service and CLI against the committed bundle.\n"
        "// Regenerate with scripts/make_ui_fixtures.py after retraining.\n"
        "export const fixtures = " + json.dumps(fixtures, indent=2) + " as const;\n"
    )
    target.write_text(text)
    print(f"wrote {target}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
