/** Client-side request validation mirroring the server's 422 semantics.
 *
 * The rules here are held to parity with the backend by a fixture of
 * recorded server verdicts (tests/fixtures/validation_cases.json): a body
 * is sent only if this validator accepts it, and it must accept exactly
 * the bodies the server accepts.
 */

import type { ComponentsSpec, ScenarioSpec, SweepRequestBody } from "./types.js";

export interface FieldError {
  field: string;
  message: string;
}

export interface Catalog {
  scenarioNames: string[];
  componentNames: string[];
  /** n_rx per scenario preset, for the nrf_set cross-check. */
  nRxByScenario: Record<string, number>;
}

const SCENARIO_FIELDS = new Set([
  "preset", "name", "n_tx", "n_rx", "snr_db", "bandwidth_hz", "n_trials",
  "base_seed", "bit_range", "nrf_set", "architectures", "cluster_rate",
  "paths_per_cluster", "angle_spread_deg",
]);

const COMPONENT_POWER_FIELDS = [
  "p_lna_w", "p_sp_w", "p_c_w", "p_ps_w", "p_m_w", "p_lo_w", "p_lpf_w",
  "p_bb_amp_w",
] as const;

const COMPONENT_FIELDS = new Set<string>([
  "preset", "name", ...COMPONENT_POWER_FIELDS, "adc_fom_j_per_step_hz",
]);

const ARCHS = new Set(["AC", "HC", "DC"]);

function isInt(v: unknown): v is number {
  return typeof v === "number" && Number.isInteger(v);
}

function isFinite_(v: unknown): v is number {
  return typeof v === "number" && Number.isFinite(v);
}

function validateScenario(spec: ScenarioSpec, catalog: Catalog, out: FieldError[]): void {
  if (typeof spec === "string") {
    if (!catalog.scenarioNames.includes(spec)) {
      out.push({ field: "scenario", message: `unknown preset '${spec}'` });
    }
    return;
  }
  for (const key of Object.keys(spec)) {
    if (!SCENARIO_FIELDS.has(key)) {
      out.push({ field: `scenario.${key}`, message: "unknown field" });
    }
  }
  const preset = spec.preset;
  if (preset !== undefined && !catalog.scenarioNames.includes(preset)) {
    out.push({ field: "scenario.preset", message: `unknown preset '${preset}'` });
  }
  if (preset === undefined) {
    for (const required of ["n_tx", "n_rx", "snr_db", "bandwidth_hz"] as const) {
      if (spec[required] === undefined) {
        out.push({ field: `scenario.${required}`, message: "required without a preset" });
      }
    }
  }
  if (spec.n_tx !== undefined && (!isInt(spec.n_tx) || spec.n_tx < 1)) {
    out.push({ field: "scenario.n_tx", message: "must be an integer >= 1" });
  }
  if (spec.n_rx !== undefined && (!isInt(spec.n_rx) || spec.n_rx < 1)) {
    out.push({ field: "scenario.n_rx", message: "must be an integer >= 1" });
  }
  if (spec.n_trials !== undefined && (!isInt(spec.n_trials) || spec.n_trials < 1)) {
    out.push({ field: "scenario.n_trials", message: "must be an integer >= 1" });
  }
  if (spec.base_seed !== undefined && !isInt(spec.base_seed)) {
    out.push({ field: "scenario.base_seed", message: "must be an integer" });
  }
  if (spec.snr_db !== undefined && !isFinite_(spec.snr_db)) {
    out.push({ field: "scenario.snr_db", message: "must be a finite number" });
  }
  if (spec.bandwidth_hz !== undefined
      && (!isFinite_(spec.bandwidth_hz) || spec.bandwidth_hz <= 0)) {
    out.push({ field: "scenario.bandwidth_hz", message: "must be > 0" });
  }
  if (spec.cluster_rate !== undefined
      && (!isFinite_(spec.cluster_rate) || spec.cluster_rate <= 0)) {
    out.push({ field: "scenario.cluster_rate", message: "must be > 0" });
  }
  if (spec.paths_per_cluster !== undefined
      && (!isInt(spec.paths_per_cluster) || spec.paths_per_cluster < 1)) {
    out.push({ field: "scenario.paths_per_cluster", message: "must be an integer >= 1" });
  }
  if (spec.angle_spread_deg !== undefined
      && (!isFinite_(spec.angle_spread_deg) || spec.angle_spread_deg < 0)) {
    out.push({ field: "scenario.angle_spread_deg", message: "must be >= 0" });
  }
  if (spec.bit_range !== undefined) {
    if (spec.bit_range.length === 0 || spec.bit_range.some((b) => !isInt(b) || b < 1)) {
      out.push({ field: "scenario.bit_range", message: "must be nonempty integers >= 1" });
    }
  }
  if (spec.architectures !== undefined) {
    if (spec.architectures.length === 0) {
      out.push({ field: "scenario.architectures", message: "must be nonempty" });
    } else if (spec.architectures.some((a) => !ARCHS.has(a))) {
      out.push({ field: "scenario.architectures", message: "entries must be AC, HC, or DC" });
    }
  }
  if (spec.nrf_set !== undefined) {
    if (spec.nrf_set.length === 0 || spec.nrf_set.some((n) => !isInt(n) || n < 1)) {
      out.push({ field: "scenario.nrf_set", message: "must be nonempty integers >= 1" });
    } else {
      const nRx = spec.n_rx
        ?? (preset !== undefined ? catalog.nRxByScenario[preset] : undefined);
      if (nRx !== undefined && Math.max(...spec.nrf_set) > nRx) {
        out.push({ field: "scenario.nrf_set", message: `entries must not exceed n_rx = ${nRx}` });
      }
    }
  }
}

function validateComponents(spec: ComponentsSpec, catalog: Catalog, out: FieldError[]): void {
  if (typeof spec === "string") {
    if (!catalog.componentNames.includes(spec)) {
      out.push({ field: "components", message: `unknown preset '${spec}'` });
    }
    return;
  }
  for (const key of Object.keys(spec)) {
    if (!COMPONENT_FIELDS.has(key)) {
      out.push({ field: `components.${key}`, message: "unknown field" });
    }
  }
  const preset = spec.preset;
  if (preset !== undefined && !catalog.componentNames.includes(preset)) {
    out.push({ field: "components.preset", message: `unknown preset '${preset}'` });
  }
  if (preset === undefined) {
    for (const required of [...COMPONENT_POWER_FIELDS, "adc_fom_j_per_step_hz"] as const) {
      if (spec[required] === undefined) {
        out.push({ field: `components.${required}`, message: "required without a preset" });
      }
    }
  }
  for (const field of COMPONENT_POWER_FIELDS) {
    const v = spec[field];
    if (v !== undefined && (!isFinite_(v) || v < 0)) {
      out.push({ field: `components.${field}`, message: "must be >= 0" });
    }
  }
  const fom = spec.adc_fom_j_per_step_hz;
  if (fom !== undefined && (!isFinite_(fom) || fom <= 0)) {
    out.push({ field: "components.adc_fom_j_per_step_hz", message: "must be > 0" });
  }
}

export function validateRequest(body: SweepRequestBody, catalog: Catalog): FieldError[] {
  const out: FieldError[] = [];
  validateScenario(body.scenario, catalog, out);
  validateComponents(body.components, catalog, out);
  if (body.iso_power_w !== undefined) {
    if (body.iso_power_w.some((p) => !isFinite_(p) || p <= 0)) {
      out.push({ field: "iso_power_w", message: "entries must be > 0" });
    }
  }
  return out;
}

export function catalogFromPresets(presets: {
  scenarios: Record<string, { n_rx: number }>;
  components: Record<string, unknown>;
}): Catalog {
  const nRxByScenario: Record<string, number> = {};
  for (const [name, s] of Object.entries(presets.scenarios)) {
    nRxByScenario[name] = s.n_rx;
  }
  return {
    scenarioNames: Object.keys(presets.scenarios),
    componentNames: Object.keys(presets.components),
    nRxByScenario,
  };
}
