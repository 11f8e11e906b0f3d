/** DOM wiring: parameter form, alpha slider, chart pane, URL sync.
 *
 * Edits are validated client-side (same rules as the server) before any
 * request leaves the browser; valid edits settle for 300 ms and then fire
 * a sweep, superseding any in-flight one. The alpha slider never triggers
 * a request: the winner is looked up in the interval tiling the server
 * already returned.
 */

import { ApiClient, ApiError, isAbort } from "./api.js";
import { buildModel, fmt, pointTitle, renderSvg } from "./chart.js";
import { DEFAULT_STATE, SessionState, buildRequestBody, debounce, decodeHash, encodeHash } from "./state.js";
import type { ComponentsDoc, PresetsDoc, ScenarioDoc } from "./types.js";
import { catalogFromPresets, validateRequest } from "./validation.js";
import { winnerIndex } from "./winner.js";

const SCENARIO_FIELDS: Array<{ key: keyof ScenarioDoc; label: string; list?: boolean }> = [
  { key: "n_tx", label: "transmit antennas" },
  { key: "n_rx", label: "receive antennas" },
  { key: "snr_db", label: "SNR before combining (dB)" },
  { key: "bandwidth_hz", label: "bandwidth (Hz)" },
  { key: "n_trials", label: "Monte Carlo trials" },
  { key: "base_seed", label: "base seed" },
  { key: "bit_range", label: "ADC bits (list)", list: true },
  { key: "nrf_set", label: "RF chains for HC (list)", list: true },
];

const COMPONENT_FIELDS: Array<{ key: keyof ComponentsDoc; label: string }> = [
  { key: "p_lna_w", label: "LNA (W)" },
  { key: "p_sp_w", label: "splitter (W)" },
  { key: "p_c_w", label: "combiner (W)" },
  { key: "p_ps_w", label: "phase shifter (W)" },
  { key: "p_m_w", label: "mixer (W)" },
  { key: "p_lo_w", label: "local oscillator (W)" },
  { key: "p_lpf_w", label: "low-pass filter (W)" },
  { key: "p_bb_amp_w", label: "baseband amplifier (W)" },
  { key: "adc_fom_j_per_step_hz", label: "ADC figure of merit (J/step/Hz)" },
];

export function mountApp(root: HTMLElement): void {
  const state: SessionState = {
    ...decodeHash(location.hash),
    doc: null,
    pending: false,
    error: null,
  };
  let presets: PresetsDoc | null = null;
  const api = () => new ApiClient(state.apiBase);

  root.innerHTML = `
    <header>
      <h1>mmWave receiver SE / EE explorer</h1>
      <p class="sub">Analog vs hybrid vs digital combining under coarse ADCs.
      Pick presets, override any power number, and read the winner off the chart.</p>
    </header>
    <div class="error-banner" id="banner" hidden></div>
    <main>
      <form id="form" autocomplete="off">
        <section>
          <h2>Scenario</h2>
          <label>preset
            <select id="scenario-preset"></select></label>
          <div id="scenario-fields"></div>
        </section>
        <section>
          <h2>Component powers</h2>
          <label>preset
            <select id="components-preset"></select></label>
          <div id="components-fields"></div>
        </section>
        <section>
          <h2>Chart</h2>
          <label><input type="checkbox" id="iso-toggle"> iso-power guides (W)
            <input type="text" id="iso-values" class="short"></label>
          <label><input type="checkbox" id="logx-toggle"> logarithmic EE axis</label>
          <label>API base <input type="text" id="api-base" class="wide"></label>
        </section>
      </form>
      <div class="chart-pane">
        <div class="alpha-row">
          <label>preference &alpha;
            <input type="range" id="alpha" min="0" max="1" step="0.001"></label>
          <span id="alpha-value"></span>
          <span class="legend">&alpha;=0 maximizes SE, &alpha;=1 maximizes EE</span>
        </div>
        <div id="winner" class="winner"></div>
        <div id="status" class="status"></div>
        <div id="chart"></div>
        <div id="runinfo" class="runinfo"></div>
      </div>
    </main>`;

  const el = <T extends HTMLElement>(id: string) => root.querySelector<T>(`#${id}`)!;
  const banner = el<HTMLDivElement>("banner");
  const form = el<HTMLFormElement>("form");
  const alphaSlider = el<HTMLInputElement>("alpha");

  function setBanner(message: string | null): void {
    state.error = message;
    banner.hidden = message === null;
    banner.textContent = message ?? "";
  }

  function fieldInput(section: string, key: string, label: string): string {
    return `<label>${label}
      <input type="text" data-section="${section}" data-field="${key}" id="${section}-${key}">
      <span class="field-error" id="err-${section}-${key}"></span></label>`;
  }

  function buildForm(): void {
    const scenarioSel = el<HTMLSelectElement>("scenario-preset");
    const componentsSel = el<HTMLSelectElement>("components-preset");
    scenarioSel.innerHTML = Object.keys(presets!.scenarios)
      .map((n) => `<option>${n}</option>`).join("");
    componentsSel.innerHTML = Object.keys(presets!.components)
      .map((n) => `<option>${n}</option>`).join("");
    scenarioSel.value = state.scenarioPreset;
    componentsSel.value = state.componentsPreset;
    el("scenario-fields").innerHTML = SCENARIO_FIELDS
      .map((f) => fieldInput("scenario", f.key, f.label)).join("");
    el("components-fields").innerHTML = COMPONENT_FIELDS
      .map((f) => fieldInput("components", f.key, f.label)).join("");
    refreshPlaceholders();
    refreshOverrideInputs();
    el<HTMLInputElement>("iso-toggle").checked = state.showIso;
    el<HTMLInputElement>("iso-values").value = state.isoPower.join(",");
    el<HTMLInputElement>("logx-toggle").checked = state.logX;
    el<HTMLInputElement>("api-base").value = state.apiBase;
    alphaSlider.value = String(state.alpha);
  }

  function refreshPlaceholders(): void {
    const scenario = presets!.scenarios[state.scenarioPreset];
    const components = presets!.components[state.componentsPreset];
    for (const f of SCENARIO_FIELDS) {
      const input = el<HTMLInputElement>(`scenario-${f.key}`);
      const v = scenario ? scenario[f.key] : "";
      input.placeholder = Array.isArray(v) ? v.join(",") : String(v ?? "");
    }
    for (const f of COMPONENT_FIELDS) {
      const input = el<HTMLInputElement>(`components-${f.key}`);
      input.placeholder = components ? String(components[f.key]) : "";
    }
  }

  function refreshOverrideInputs(): void {
    for (const f of SCENARIO_FIELDS) {
      const v = state.scenarioOverrides[f.key];
      el<HTMLInputElement>(`scenario-${f.key}`).value =
        v === undefined ? "" : Array.isArray(v) ? v.join(",") : String(v);
    }
    for (const f of COMPONENT_FIELDS) {
      const v = state.componentsOverrides[f.key];
      el<HTMLInputElement>(`components-${f.key}`).value = v === undefined ? "" : String(v);
    }
  }

  function parseOverrides(): string[] {
    const parseErrors: string[] = [];
    const scenario: Record<string, unknown> = {};
    for (const f of SCENARIO_FIELDS) {
      const raw = el<HTMLInputElement>(`scenario-${f.key}`).value.trim();
      if (!raw) continue;
      if (f.list) {
        const vals = raw.split(",").map((tok) => Number(tok.trim()));
        if (vals.some((v) => !Number.isFinite(v))) {
          parseErrors.push(`scenario.${f.key}`);
          continue;
        }
        scenario[f.key] = vals;
      } else {
        const v = Number(raw);
        if (!Number.isFinite(v)) {
          parseErrors.push(`scenario.${f.key}`);
          continue;
        }
        scenario[f.key] = v;
      }
    }
    const components: Record<string, unknown> = {};
    for (const f of COMPONENT_FIELDS) {
      const raw = el<HTMLInputElement>(`components-${f.key}`).value.trim();
      if (!raw) continue;
      const v = Number(raw);
      if (!Number.isFinite(v)) {
        parseErrors.push(`components.${f.key}`);
        continue;
      }
      components[f.key] = v;
    }
    state.scenarioOverrides = scenario as SessionState["scenarioOverrides"];
    state.componentsOverrides = components as SessionState["componentsOverrides"];

    const isoRaw = el<HTMLInputElement>("iso-values").value.trim();
    state.isoPower = isoRaw
      ? isoRaw.split(",").map((tok) => Number(tok.trim())).filter((v) => Number.isFinite(v))
      : [];
    return parseErrors;
  }

  function showFieldErrors(fields: Array<{ field: string; message: string }>): void {
    root.querySelectorAll<HTMLSpanElement>(".field-error").forEach((span) => {
      span.textContent = "";
    });
    for (const err of fields) {
      const id = "err-" + err.field.replace(".", "-");
      const span = root.querySelector<HTMLSpanElement>(`#${id}`);
      if (span) span.textContent = err.message;
      else setBanner(`${err.field}: ${err.message}`);
    }
  }

  function renderChart(): void {
    if (!state.doc) return;
    const model = buildModel(state.doc, {
      alpha: state.alpha,
      logX: state.logX,
      showIso: state.showIso,
    });
    el("chart").innerHTML = renderSvg(model);
    const winner = state.doc.points[winnerIndex(state.doc, state.alpha)]!;
    el("winner").innerHTML =
      `<strong>winner at &alpha;=${state.alpha.toFixed(3)}:</strong> ${pointTitle(winner)}`;
    const s = state.doc.scenario;
    el("runinfo").textContent =
      `${s.name} | ${s.n_trials} trials, base seed ${s.base_seed} | ` +
      `${state.doc.points.length} candidates | ` +
      `components: ${state.doc.components.name ?? "custom"}`;
    el("alpha-value").textContent = state.alpha.toFixed(3);
  }

  function syncHash(): void {
    const encoded = encodeHash(state);
    if (("#" + location.hash.replace(/^#/, "")) !== ("#" + encoded.replace(/^#/, ""))) {
      history.replaceState(null, "", encoded || location.pathname + location.search);
    }
  }

  async function runSweep(): Promise<void> {
    const body = buildRequestBody(state);
    state.pending = true;
    el("status").textContent = "sweeping...";
    try {
      const doc = await api().sweep(body);
      state.doc = doc;
      setBanner(null);
      renderChart();
    } catch (err) {
      if (isAbort(err)) return;
      // keep the previous chart and state; surface the failure inline
      setBanner(err instanceof ApiError
        ? `request rejected (${err.status}) ${err.field}: ${err.message}`
        : `API unreachable: ${String(err)}`);
    } finally {
      state.pending = false;
      el("status").textContent = "";
    }
  }

  const scheduleSweep = debounce(() => void runSweep(), 300);

  function onEdit(): void {
    const parseErrors = parseOverrides();
    if (parseErrors.length > 0) {
      scheduleSweep.cancel();
      showFieldErrors(parseErrors.map((f) => ({ field: f, message: "not a number" })));
      return;
    }
    const errors = validateRequest(buildRequestBody(state), catalogFromPresets(presets!));
    showFieldErrors(errors);
    syncHash();
    if (errors.length === 0) {
      scheduleSweep();
    } else {
      scheduleSweep.cancel();
    }
  }

  form.addEventListener("input", (ev) => {
    const target = ev.target as HTMLElement;
    if (target.id === "scenario-preset") {
      state.scenarioPreset = (target as HTMLSelectElement).value;
      refreshPlaceholders();
    }
    if (target.id === "components-preset") {
      state.componentsPreset = (target as HTMLSelectElement).value;
      refreshPlaceholders();
    }
    if (target.id === "iso-toggle") state.showIso = el<HTMLInputElement>("iso-toggle").checked;
    if (target.id === "logx-toggle") state.logX = el<HTMLInputElement>("logx-toggle").checked;
    if (target.id === "api-base") state.apiBase = el<HTMLInputElement>("api-base").value;
    if (target.id === "iso-toggle" || target.id === "logx-toggle") {
      syncHash();
      renderChart();
      if (target.id === "iso-toggle") onEdit();  // iso list rides in the request
      return;
    }
    onEdit();
  });

  alphaSlider.addEventListener("input", () => {
    state.alpha = Number(alphaSlider.value);
    syncHash();
    renderChart();
  });

  window.addEventListener("hashchange", () => {
    const restored = decodeHash(location.hash);
    Object.assign(state, restored);
    refreshPlaceholders();
    refreshOverrideInputs();
    alphaSlider.value = String(state.alpha);
    onEdit();
    renderChart();
  });

  (async () => {
    try {
      presets = await api().presets();
    } catch (err) {
      setBanner(`cannot reach the API at ${state.apiBase}; start it with ` +
        `"mmwrx serve" and reload (${String(err)})`);
      return;
    }
    if (!(state.scenarioPreset in presets.scenarios)) {
      state.scenarioPreset = DEFAULT_STATE.scenarioPreset;
    }
    if (!(state.componentsPreset in presets.components)) {
      state.componentsPreset = DEFAULT_STATE.componentsPreset;
    }
    buildForm();
    await runSweep();
  })();
}
