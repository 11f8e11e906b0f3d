import { readFileSync } from "node:fs";

import type { ChartDocument, PresetsDoc } from "../src/types.js";

export function loadFixture<T>(name: string): T {
  const url = new URL(`./fixtures/${name}`, import.meta.url);
  return JSON.parse(readFileSync(url, "utf8")) as T;
}

export const chartFixture = (): ChartDocument => loadFixture<ChartDocument>("dl_high_hpadc.json");
export const presetsFixture = (): PresetsDoc => loadFixture<PresetsDoc>("presets.json");

export interface ValidationCase {
  name: string;
  body: Record<string, unknown>;
  status: number;
  error?: { code: string; field: string; message: string };
}

export const validationCases = (): ValidationCase[] =>
  loadFixture<ValidationCase[]>("validation_cases.json");
