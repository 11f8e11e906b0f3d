/** Wire types for the sweep API (chart document schema v1). */

export type Arch = "AC" | "HC" | "DC";

export interface ScenarioDoc {
  name: string;
  n_tx: number;
  n_rx: number;
  snr_db: number;
  bandwidth_hz: number;
  n_trials: number;
  base_seed: number;
  bit_range: number[];
  nrf_set: number[];
  architectures: Arch[];
  cluster_rate: number;
  paths_per_cluster: number;
  angle_spread_deg: number;
}

export interface ComponentsDoc {
  name: string | null;
  p_lna_w: number;
  p_sp_w: number;
  p_c_w: number;
  p_ps_w: number;
  p_m_w: number;
  p_lo_w: number;
  p_lpf_w: number;
  p_bb_amp_w: number;
  adc_fom_j_per_step_hz: number;
}

export interface AxisMeta {
  quantity: string;
  unit: string;
  scale: string;
}

export interface ChartPoint {
  index: number;
  arch: Arch;
  bits: number;
  n_rf: number | null;
  se_bit_s_hz: number;
  ee_gbit_j: number;
  mean_rate_bit_s: number;
  total_power_w: number;
  rate_std_err_bit_s: number;
  trial_count: number;
  optimal: boolean;
}

export interface AlphaInterval {
  alpha_min: number;
  alpha_max: number;
  point_index: number;
}

export interface ChartDocument {
  schema: string;
  scenario: ScenarioDoc;
  components: ComponentsDoc;
  axes: { x: AxisMeta; y: AxisMeta };
  points: ChartPoint[];
  optimal_set: AlphaInterval[];
  iso_power_w: number[];
}

export interface PresetsDoc {
  schema: string;
  scenarios: Record<string, ScenarioDoc>;
  components: Record<string, ComponentsDoc>;
}

/** Scenario/components sections of a POST /api/v1/sweep body. */
export type ScenarioSpec = string | (Partial<ScenarioDoc> & { preset?: string });
export type ComponentsSpec = string | (Partial<ComponentsDoc> & { preset?: string });

export interface SweepRequestBody {
  scenario: ScenarioSpec;
  components: ComponentsSpec;
  iso_power_w?: number[];
}

export interface ApiErrorBody {
  code: string;
  field: string;
  message: string;
}
