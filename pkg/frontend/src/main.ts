// DOM wiring: advisor panel (toggles, presets, verdicts, decision tree
// overlay) and explorer panel (heatmaps, clusters, importance bars).

import { api, type AssociationResponse, type SolutionsResponse, type Verdict } from "./api.js";
import {
  applyFailure,
  applySuccess,
  initialState,
  loadPreset,
  toggleFeature,
  type AdvisorState,
  type PredictRequest,
} from "./state.js";
import { barWidths, describePath, rampColor, treeRows } from "./charts.js";

const $ = (id: string) => document.getElementById(id)!;

let featureNames: string[] = [];
let areaNames: string[] = [];
let state: AdvisorState = initialState();
let selectedArea: string | null = null;

function dispatch(request: PredictRequest): void {
  render();
  api
    .predict(request.features)
    .then((resp) => {
      state = applySuccess(state, request.token, resp.verdicts as unknown as Verdict[]);
      render();
    })
    .catch((err) => {
      state = applyFailure(state, request.token, String(err));
      render();
    });
}

function render(): void {
  const banner = $("banner");
  banner.textContent = state.error ? `API error: ${state.error} (toggles stay usable)` : "";
  banner.className = state.error ? "banner error" : "banner";

  featureNames.forEach((_, i) => {
    const box = document.getElementById(`toggle-${i}`) as HTMLInputElement | null;
    if (box) box.checked = state.toggles[i];
  });

  const list = $("verdicts");
  list.innerHTML = "";
  if (state.pending) {
    list.innerHTML = '<li class="pending">predicting…</li>';
    return;
  }
  if (!state.verdicts) return;
  for (const v of state.verdicts) {
    const li = document.createElement("li");
    const badge = document.createElement("span");
    badge.className = `badge ${v.verdict === "Suitable" ? "suitable" : "unsuitable"}`;
    badge.textContent = v.verdict;
    const name = document.createElement("button");
    name.className = "area-name";
    name.textContent = v.area.replaceAll("_", " ");
    name.onclick = () => showTree(v.area);
    const path = document.createElement("small");
    path.textContent = ` via ${describePath(v.path)}`;
    li.append(name, badge, path);
    list.append(li);
  }
  if (selectedArea) void renderTree(selectedArea);
}

function showTree(area: string): void {
  selectedArea = area;
  void renderTree(area);
}

async function renderTree(area: string): Promise<void> {
  const target = $("tree");
  try {
    const doc = await api.tree(area);
    const rows = treeRows(doc.tree.root as never, featureNames, state.toggles.map(Number));
    target.innerHTML = `<h3>${area.replaceAll("_", " ")} decision tree ` +
      `(held-out accuracy ${(doc.accuracy * 100).toFixed(0)}%)</h3>`;
    const pre = document.createElement("div");
    pre.className = "tree";
    for (const row of rows) {
      const div = document.createElement("div");
      div.style.paddingLeft = `${row.depth * 18}px`;
      div.className = row.onPath ? "tree-row on-path" : "tree-row";
      div.textContent = row.text;
      pre.append(div);
    }
    target.append(pre);
  } catch (err) {
    target.textContent = `could not load tree: ${err}`;
  }
}

function buildToggles(): void {
  const host = $("toggles");
  featureNames.forEach((name, i) => {
    const label = document.createElement("label");
    const box = document.createElement("input");
    box.type = "checkbox";
    box.id = `toggle-${i}`;
    box.onchange = () => {
      const result = toggleFeature(state, i);
      state = result.state;
      dispatch(result.request);
    };
    label.append(box, document.createTextNode(" " + name.replaceAll("_", " ")));
    host.append(label);
  });
}

function buildPresets(solutions: SolutionsResponse): void {
  const select = $("preset") as HTMLSelectElement;
  const blank = document.createElement("option");
  blank.textContent = "load a known solution…";
  blank.value = "";
  select.append(blank);
  for (const s of solutions.solutions) {
    const opt = document.createElement("option");
    opt.value = s.name;
    opt.textContent = s.name;
    select.append(opt);
  }
  select.onchange = () => {
    const found = solutions.solutions.find((s) => s.name === select.value);
    if (!found) return;
    const result = loadPreset(state, found.features);
    state = result.state;
    dispatch(result.request);
  };
}

function renderHeatmap(host: HTMLElement, assoc: AssociationResponse): void {
  const table = document.createElement("table");
  table.className = "heatmap";
  const head = document.createElement("tr");
  head.append(document.createElement("th"));
  for (const n of assoc.feature_names) {
    const th = document.createElement("th");
    th.textContent = n.slice(0, 6);
    head.append(th);
  }
  table.append(head);
  assoc.values.forEach((row, i) => {
    const tr = document.createElement("tr");
    const th = document.createElement("th");
    th.textContent = assoc.feature_names[i];
    tr.append(th);
    row.forEach((v) => {
      const td = document.createElement("td");
      td.style.background = rampColor(v, assoc.kind);
      td.title = v === null ? "undefined" : v.toFixed(4);
      td.textContent = v === null ? "–" : v.toFixed(2);
      tr.append(td);
    });
    table.append(tr);
  });
  host.innerHTML = "";
  host.append(table);
}

async function renderExplorer(): Promise<void> {
  try {
    const [rho, chi, clusters] = await Promise.all([
      api.spearman(),
      api.chisquare(),
      api.clusters(6, "All"),
    ]);
    renderHeatmap($("spearman"), rho);
    renderHeatmap($("chisquare"), chi.p_values);
    const host = $("clusters");
    host.innerHTML = `<p>six classes over all nine features; sizes ${clusters.sizes.join(", ")}</p>`;
    for (const c of clusters.clusters) {
      const det = document.createElement("details");
      const sum = document.createElement("summary");
      sum.textContent = `class ${c.cluster + 1} · ${c.size} solutions · ` +
        (c.characterization.slice(0, 3).join("; ") || "mixed profile");
      det.append(sum);
      const p = document.createElement("p");
      p.textContent = c.members.join(", ");
      det.append(p);
      host.append(det);
    }
  } catch (err) {
    $("banner").textContent = `API error: ${err}`;
    $("banner").className = "banner error";
  }
}

async function renderImportance(area: string): Promise<void> {
  try {
    const doc = await api.importance(area);
    const widths = barWidths(doc.importance, 260);
    const host = $("importance");
    host.innerHTML = "";
    doc.feature_names.forEach((name, i) => {
      const row = document.createElement("div");
      row.className = "bar-row";
      const label = document.createElement("span");
      label.textContent = name.replaceAll("_", " ");
      const bar = document.createElement("span");
      bar.className = "bar";
      bar.style.width = `${widths[i]}px`;
      bar.title = doc.importance[i].toFixed(4);
      row.append(label, bar);
      host.append(row);
    });
  } catch (err) {
    $("importance").textContent = `could not load importance: ${err}`;
  }
}

async function start(): Promise<void> {
  const areaSelect = $("importance-area") as HTMLSelectElement;
  try {
    const solutions = await api.solutions();
    featureNames = solutions.feature_names;
    areaNames = solutions.area_names;
    buildToggles();
    buildPresets(solutions);
    for (const area of areaNames) {
      const opt = document.createElement("option");
      opt.value = area;
      opt.textContent = area.replaceAll("_", " ");
      areaSelect.append(opt);
    }
    areaSelect.value = "healthcare";
    areaSelect.onchange = () => void renderImportance(areaSelect.value);
    await Promise.all([renderExplorer(), renderImportance("healthcare")]);
  } catch (err) {
    $("banner").textContent = `API unreachable: ${err}`;
    $("banner").className = "banner error";
  }
}

void start();
