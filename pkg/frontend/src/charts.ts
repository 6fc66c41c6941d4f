// Pure presentation helpers: color ramps, bar scaling, decision-path walking.

import type { PathStep, TreeNode } from "./api.js";

// Fixed ramp shared with the exported SVG heatmaps: correlations map
// [-1, 1] to blue-white-red, p-values map [0, 1] to white-blue.
export function rampColor(value: number | null, kind: string): string {
  if (value === null || Number.isNaN(value)) return "#cccccc";
  const hex = (n: number) => Math.round(n).toString(16).padStart(2, "0");
  if (kind === "spearman_rho") {
    const t = Math.max(-1, Math.min(1, value));
    if (t >= 0) return `#ff${hex(255 * (1 - t))}${hex(255 * (1 - t))}`;
    return `#${hex(255 * (1 + t))}${hex(255 * (1 + t))}ff`;
  }
  const t = Math.max(0, Math.min(1, value));
  return `#${hex(255 * (1 - t))}${hex(255 * (1 - 0.7 * t))}ff`;
}

export function tallestBar(names: readonly string[], values: readonly number[]): string {
  let best = 0;
  for (let i = 1; i < values.length; i++) {
    if (values[i] > values[best]) best = i;
  }
  return names[best];
}

export function barWidths(values: readonly number[], maxPx: number): number[] {
  const top = Math.max(...values, 1e-12);
  return values.map((v) => (v / top) * maxPx);
}

export interface TreeRow {
  depth: number;
  text: string;
  onPath: boolean;
  isLeaf: boolean;
}

function isLeaf(node: TreeNode): node is { label: "Suitable" | "NotSuitable"; counts: [number, number] } {
  return (node as { label?: string }).label !== undefined;
}

// Flatten a decision tree into indented rows, marking the run of nodes the
// given feature vector traverses.
export function treeRows(
  root: TreeNode,
  featureNames: readonly string[],
  features: readonly number[]
): TreeRow[] {
  const rows: TreeRow[] = [];

  const walk = (node: TreeNode, depth: number, onPath: boolean, label: string) => {
    if (isLeaf(node)) {
      rows.push({
        depth,
        text: `${label}${node.label} (${node.counts[1]}/${node.counts[0] + node.counts[1]} suitable)`,
        onPath,
        isLeaf: true,
      });
      return;
    }
    rows.push({ depth, text: `${label}${featureNames[node.feature]}?`, onPath, isLeaf: false });
    const goesPresent = features[node.feature] === 1;
    walk(node.absent, depth + 1, onPath && !goesPresent, "absent: ");
    walk(node.present, depth + 1, onPath && goesPresent, "present: ");
  };

  walk(root, 0, true, "");
  return rows;
}

export function describePath(path: readonly PathStep[]): string {
  if (path.length === 0) return "single leaf";
  return path.map((s) => `${s.feature}=${s.present ? "present" : "absent"}`).join(" → ");
}
