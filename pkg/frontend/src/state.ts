/** UI session state and its shareable-URL encoding.
 *
 * Everything needed to reproduce a chart lives in the state (and hence in
 * the URL hash): preset choices with field overrides, the alpha slider,
 * iso-power guides, and axis scaling. The last response and the pending
 * flag are session-local and never serialized.
 */

import type { ChartDocument, ComponentsDoc, ScenarioDoc, SweepRequestBody } from "./types.js";

export interface UiState {
  scenarioPreset: string;
  scenarioOverrides: Partial<ScenarioDoc>;
  componentsPreset: string;
  componentsOverrides: Partial<ComponentsDoc>;
  alpha: number;
  isoPower: number[];
  showIso: boolean;
  logX: boolean;
  apiBase: string;
}

export interface SessionState extends UiState {
  doc: ChartDocument | null;
  pending: boolean;
  error: string | null;
}

export const DEFAULT_STATE: UiState = {
  scenarioPreset: "UL-high",
  scenarioOverrides: {},
  componentsPreset: "HPADC",
  componentsOverrides: {},
  alpha: 0.5,
  isoPower: [1, 3, 8],
  showIso: false,
  logX: false,
  apiBase: "http://127.0.0.1:8000",
};

export function buildRequestBody(state: UiState): SweepRequestBody {
  const scenario = Object.keys(state.scenarioOverrides).length
    ? { preset: state.scenarioPreset, ...state.scenarioOverrides }
    : state.scenarioPreset;
  const components = Object.keys(state.componentsOverrides).length
    ? { preset: state.componentsPreset, ...state.componentsOverrides }
    : state.componentsPreset;
  const body: SweepRequestBody = { scenario, components };
  if (state.showIso && state.isoPower.length > 0) {
    body.iso_power_w = state.isoPower;
  }
  return body;
}

/** Compact hash encoding; only fields differing from the defaults appear. */
export function encodeHash(state: UiState): string {
  const compact: Record<string, unknown> = {};
  if (state.scenarioPreset !== DEFAULT_STATE.scenarioPreset) {
    compact.s = state.scenarioPreset;
  }
  if (Object.keys(state.scenarioOverrides).length) {
    compact.so = state.scenarioOverrides;
  }
  if (state.componentsPreset !== DEFAULT_STATE.componentsPreset) {
    compact.c = state.componentsPreset;
  }
  if (Object.keys(state.componentsOverrides).length) {
    compact.co = state.componentsOverrides;
  }
  if (state.alpha !== DEFAULT_STATE.alpha) compact.a = state.alpha;
  if (state.showIso) compact.iso = state.isoPower;
  if (state.logX) compact.logx = 1;
  if (state.apiBase !== DEFAULT_STATE.apiBase) compact.api = state.apiBase;
  if (Object.keys(compact).length === 0) return "";
  return "#" + encodeURIComponent(JSON.stringify(compact));
}

export function decodeHash(hash: string): UiState {
  const state: UiState = {
    ...DEFAULT_STATE,
    scenarioOverrides: {},
    componentsOverrides: {},
    isoPower: [...DEFAULT_STATE.isoPower],
  };
  const raw = hash.replace(/^#/, "");
  if (!raw) return state;
  let compact: Record<string, unknown>;
  try {
    compact = JSON.parse(decodeURIComponent(raw));
  } catch {
    return state;
  }
  if (typeof compact.s === "string") state.scenarioPreset = compact.s;
  if (compact.so && typeof compact.so === "object") {
    state.scenarioOverrides = compact.so as Partial<ScenarioDoc>;
  }
  if (typeof compact.c === "string") state.componentsPreset = compact.c;
  if (compact.co && typeof compact.co === "object") {
    state.componentsOverrides = compact.co as Partial<ComponentsDoc>;
  }
  if (typeof compact.a === "number" && compact.a >= 0 && compact.a <= 1) {
    state.alpha = compact.a;
  }
  if (Array.isArray(compact.iso)) {
    state.showIso = true;
    state.isoPower = compact.iso.filter((p): p is number => typeof p === "number");
  }
  if (compact.logx) state.logX = true;
  if (typeof compact.api === "string") state.apiBase = compact.api;
  return state;
}

/** Trailing-edge debounce with cancel, for the 300 ms edit settle window. */
export function debounce<A extends unknown[]>(fn: (...args: A) => void, ms: number) {
  let timer: ReturnType<typeof setTimeout> | null = null;
  const wrapped = (...args: A) => {
    if (timer !== null) clearTimeout(timer);
    timer = setTimeout(() => {
      timer = null;
      fn(...args);
    }, ms);
  };
  wrapped.cancel = () => {
    if (timer !== null) clearTimeout(timer);
    timer = null;
  };
  return wrapped as typeof wrapped & { cancel: () => void };
}
