// Advisor panel state machine, kept framework-free so it is directly testable.
//
// Every toggle (or preset load) issues exactly one predict request tagged with
// a monotonically increasing token.  Only the response matching the newest
// token may render, so verdicts on screen always correspond to the toggle
// state that produced them; anything older is dropped on arrival.

import type { Verdict } from "./api.js";

export const FEATURE_COUNT = 9;

export interface AdvisorState {
  toggles: boolean[];
  latestToken: number; // token of the most recent request
  renderedToken: number; // token whose verdicts are on screen (0 = none)
  verdicts: Verdict[] | null;
  pending: boolean;
  error: string | null;
}

export interface PredictRequest {
  token: number;
  features: number[];
}

export function initialState(): AdvisorState {
  return {
    toggles: new Array(FEATURE_COUNT).fill(false),
    latestToken: 0,
    renderedToken: 0,
    verdicts: null,
    pending: false,
    error: null,
  };
}

export function featureVector(state: AdvisorState): number[] {
  return state.toggles.map((t) => (t ? 1 : 0));
}

function issue(state: AdvisorState, toggles: boolean[]): { state: AdvisorState; request: PredictRequest } {
  const token = state.latestToken + 1;
  const next: AdvisorState = {
    ...state,
    toggles,
    latestToken: token,
    // clear the display: the old verdicts no longer match the toggles
    verdicts: null,
    renderedToken: 0,
    pending: true,
    error: null,
  };
  return { state: next, request: { token, features: toggles.map((t) => (t ? 1 : 0)) } };
}

export function toggleFeature(
  state: AdvisorState,
  index: number
): { state: AdvisorState; request: PredictRequest } {
  if (index < 0 || index >= FEATURE_COUNT) throw new Error(`bad feature index ${index}`);
  const toggles = state.toggles.slice();
  toggles[index] = !toggles[index];
  return issue(state, toggles);
}

export function loadPreset(
  state: AdvisorState,
  features: number[]
): { state: AdvisorState; request: PredictRequest } {
  if (features.length !== FEATURE_COUNT) throw new Error("preset must have 9 flags");
  return issue(
    state,
    features.map((v) => v === 1)
  );
}

export function applySuccess(
  state: AdvisorState,
  token: number,
  verdicts: Verdict[]
): AdvisorState {
  if (token !== state.latestToken) return state; // stale response, never rendered
  return { ...state, verdicts, renderedToken: token, pending: false, error: null };
}

export function applyFailure(state: AdvisorState, token: number, message: string): AdvisorState {
  if (token !== state.latestToken) return state;
  return { ...state, verdicts: null, renderedToken: 0, pending: false, error: message };
}
