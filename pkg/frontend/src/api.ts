// Typed client for the advisor HTTP API.

export interface PathStep {
  feature: string;
  present: boolean;
}

export interface Verdict {
  area: string;
  verdict: "Suitable" | "NotSuitable";
  path: PathStep[];
  leaf_counts: { NotSuitable: number; Suitable: number };
}

export interface PredictResponse {
  dataset_version: string;
  bundle_seed: number;
  features: number[];
  verdicts: Verdict[];
}

export interface SolutionRecord {
  name: string;
  features: number[];
  areas: number[];
  notes: string[];
}

export interface SolutionsResponse {
  feature_names: string[];
  area_names: string[];
  solutions: SolutionRecord[];
}

export interface AssociationResponse {
  kind: string;
  feature_names: string[];
  values: (number | null)[][];
}

export interface ImportanceResponse {
  area: string;
  feature_names: string[];
  importance: number[];
}

export interface TreeLeaf {
  label: "Suitable" | "NotSuitable";
  counts: [number, number];
}

export interface TreeInternal {
  feature: number;
  absent: TreeNode;
  present: TreeNode;
  samples?: number;
  decrease?: number;
}

export type TreeNode = TreeLeaf | TreeInternal;

export interface TreeResponse {
  area: string;
  accuracy: number;
  tree: { root: TreeNode };
}

export interface ClustersResponse {
  k: number;
  config: string;
  sizes: number[];
  clusters: {
    cluster: number;
    size: number;
    members: string[];
    characterization: string[];
  }[];
}

async function getJson<T>(url: string): Promise<T> {
  const resp = await fetch(url);
  if (!resp.ok) throw new Error(`${url} failed: ${resp.status}`);
  return (await resp.json()) as T;
}

export const api = {
  solutions: () => getJson<SolutionsResponse>("/api/solutions"),
  spearman: () => getJson<AssociationResponse>("/api/stats/spearman"),
  chisquare: () =>
    getJson<{ p_values: AssociationResponse }>("/api/stats/chisquare"),
  clusters: (k: number, config: string) =>
    getJson<ClustersResponse>(`/api/clusters?k=${k}&config=${config}`),
  importance: (area: string) => getJson<ImportanceResponse>(`/api/importance/${area}`),
  tree: (area: string) => getJson<TreeResponse>(`/api/tree/${area}`),
  predict: async (features: number[]): Promise<PredictResponse> => {
    const resp = await fetch("/api/predict", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ features }),
    });
    if (!resp.ok) throw new Error(`predict failed: ${resp.status}`);
    return (await resp.json()) as PredictResponse;
  },
};

export type PredictFn = (features: number[]) => Promise<PredictResponse>;
