import { describe, expect, it } from "vitest";

import { buildModel, pointTitle, renderSvg } from "../src/chart.js";
import { winnerIndex } from "../src/winner.js";
import { chartFixture } from "./helpers.js";

const doc = chartFixture();

describe("chart model", () => {
  const model = buildModel(doc, { alpha: 0.5, logX: false, showIso: false });

  it("has one marker per point", () => {
    expect(model.markers.length).toBe(doc.points.length);
  });

  it("groups one series per (arch, n_rf) ordered by bits", () => {
    const expected = new Set(doc.points.map((p) => `${p.arch}/${p.n_rf ?? ""}`));
    expect(model.series.length).toBe(expected.size);
    for (const s of model.series) {
      const pts = doc.points
        .filter((p) => p.arch === s.arch && p.n_rf === s.nRf)
        .sort((a, b) => a.bits - b.bits);
      expect(s.path.length).toBe(pts.length);
    }
  });

  it("emphasizes exactly the interval winner at the current alpha", () => {
    for (const alpha of [0, 0.25, 0.5, 0.75, 1]) {
      const m = buildModel(doc, { alpha, logX: false, showIso: false });
      const emphasized = m.markers.filter((mk) => mk.emphasized);
      expect(emphasized.length).toBe(1);
      expect(emphasized[0]!.point.index).toBe(winnerIndex(doc, alpha));
    }
  });

  it("marks the server-flagged optimal points", () => {
    const flagged = model.markers.filter((m) => m.optimal).map((m) => m.point.index);
    expect(new Set(flagged)).toEqual(
      new Set(doc.points.filter((p) => p.optimal).map((p) => p.index)));
  });

  it("keeps x positions monotone in EE on both axis scales", () => {
    const byEe = [...doc.points].sort((a, b) => a.ee_gbit_j - b.ee_gbit_j);
    for (const logX of [false, true]) {
      const m = buildModel(doc, { alpha: 0.5, logX, showIso: false });
      const pos = new Map(m.markers.map((mk) => [mk.point.index, mk.x]));
      for (let i = 1; i < byEe.length; i++) {
        expect(pos.get(byEe[i]!.index)!).toBeGreaterThanOrEqual(
          pos.get(byEe[i - 1]!.index)!);
      }
    }
  });

  it("draws iso-power guides with slope P/B in chart units", () => {
    const withIso = buildModel(chartWithIso(), { alpha: 0.5, logX: false, showIso: true });
    expect(withIso.isoLines.length).toBe(2);
    // invert the scales on two sampled path points and check SE = P/B * EE
    const m = withIso;
    const [p0, p1] = [m.isoLines[0]!.path[0]!, m.isoLines[0]!.path.at(-1)!];
    const slopePx = (p1[1] - p0[1]) / (p1[0] - p0[0]);
    const xSpanData = Math.max(...doc.points.map((p) => p.ee_gbit_j)) * 1.06;
    const ySpanData = Math.max(...doc.points.map((p) => p.se_bit_s_hz)) * 1.06;
    const xSpanPx = m.plot.right - m.plot.left;
    const ySpanPx = m.plot.bottom - m.plot.top;
    const slopeData = -slopePx * (ySpanData / ySpanPx) * (xSpanPx / xSpanData);
    const expected = (1.0 / doc.scenario.bandwidth_hz) * 1e9;
    expect(slopeData).toBeCloseTo(expected, 6);
  });

  function chartWithIso() {
    return { ...doc, iso_power_w: [1.0, 3.0] };
  }
});

describe("svg rendering", () => {
  it("emits one marker circle per point and a single halo", () => {
    const svg = renderSvg(buildModel(doc, { alpha: 0.3, logX: false, showIso: false }));
    expect(svg.match(/class="pt/g)!.length).toBe(doc.points.length);
    expect(svg.match(/class="halo"/g)!.length).toBe(1);
  });

  it("carries hover titles with the full point readout", () => {
    const svg = renderSvg(buildModel(doc, { alpha: 0.3, logX: false, showIso: false }));
    const sample = doc.points.find((p) => p.arch === "HC")!;
    expect(svg).toContain(pointTitle(sample));
    expect(pointTitle(sample)).toContain(`N_RF=${sample.n_rf}`);
    expect(pointTitle(sample)).toContain("W");
  });

  it("renders iso guides only when enabled", () => {
    const base = { ...doc, iso_power_w: [2.0] };
    const off = renderSvg(buildModel(base, { alpha: 0.3, logX: false, showIso: false }));
    const on = renderSvg(buildModel(base, { alpha: 0.3, logX: false, showIso: true }));
    expect(off).not.toContain('class="iso"');
    expect(on).toContain('class="iso"');
  });
});
