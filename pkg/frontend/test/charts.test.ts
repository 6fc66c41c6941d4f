import { describe, expect, it } from "vitest";

import { barWidths, describePath, rampColor, tallestBar, treeRows } from "../src/charts.js";
import type { TreeNode } from "../src/api.js";
import { fixtures } from "./fixtures.js";

describe("importance bars", () => {
  it("tallest healthcare bar is `consistent` on the committed bundle", () => {
    const doc = fixtures.importance_healthcare;
    expect(tallestBar(doc.feature_names, doc.importance as unknown as number[])).toBe(
      "consistent"
    );
  });

  it("bar widths scale to the maximum", () => {
    const widths = barWidths([0.5, 1.0, 0.25], 200);
    expect(widths).toEqual([100, 200, 50]);
  });
});

describe("heatmap ramp", () => {
  it("is fixed and symmetric around zero for correlations", () => {
    expect(rampColor(1, "spearman_rho")).toBe("#ff0000");
    expect(rampColor(-1, "spearman_rho")).toBe("#0000ff");
    expect(rampColor(0, "spearman_rho")).toBe("#ffffff");
    expect(rampColor(null, "spearman_rho")).toBe("#cccccc");
  });

  it("strong negative correlation between free and proprietary renders blue", () => {
    const doc = fixtures.spearman;
    const i = doc.feature_names.indexOf("free");
    const j = doc.feature_names.indexOf("proprietary");
    const value = doc.values[i][j] as number;
    expect(value).toBeLessThan(-0.9);
    const color = rampColor(value, "spearman_rho");
    // deep blue: red/green channels nearly zero
    expect(color.slice(5, 7)).toBe("ff");
    expect(parseInt(color.slice(1, 3), 16)).toBeLessThan(20);
  });
});

describe("decision tree rows", () => {
  const names = fixtures.tree_geospatial.tree ? fixtures.spearman.feature_names : [];

  it("marks exactly one root-to-leaf run as the active path", () => {
    const root = fixtures.tree_geospatial.tree.root as unknown as TreeNode;
    const rows = treeRows(root, fixtures.spearman.feature_names, [1, 0, 0, 0, 1, 0, 1, 1, 0]);
    const leavesOnPath = rows.filter((r) => r.isLeaf && r.onPath);
    expect(leavesOnPath).toHaveLength(1);
    // MongoDB's vector reaches a Suitable leaf in the geospatial tree
    expect(leavesOnPath[0].text).toContain("Suitable");
    expect(rows.filter((r) => r.onPath).length).toBeGreaterThan(1);
  });

  it("flattens leaves and internals with depth indents", () => {
    const root: TreeNode = {
      feature: 0,
      absent: { label: "NotSuitable", counts: [5, 1] },
      present: { label: "Suitable", counts: [0, 4] },
    };
    const rows = treeRows(root, names.length ? names : ["document_oriented"], [1]);
    expect(rows[0].text).toContain("document_oriented?");
    expect(rows[1].depth).toBe(1);
    expect(rows[2].onPath).toBe(true);
  });
});

describe("path description", () => {
  it("renders an empty path as a single leaf", () => {
    expect(describePath([])).toBe("single leaf");
  });

  it("joins steps in order", () => {
    expect(
      describePath([
        { feature: "graph", present: true },
        { feature: "free", present: false },
      ])
    ).toBe("graph=present → free=absent");
  });
});
