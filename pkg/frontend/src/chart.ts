/** Pure chart geometry and SVG rendering for a chart document.
 *
 * EE (Gbit/J) on x, SE (bit/s/Hz) on y; one polyline per (arch, n_rf)
 * series ordered by bits; server-flagged optimal points drawn with a ring;
 * the point winning at the current alpha gets the emphasis halo. All
 * numbers come straight from the document; nothing is recomputed.
 */

import type { Arch, ChartDocument, ChartPoint } from "./types.js";
import { winnerIndex } from "./winner.js";

export interface ChartOptions {
  alpha: number;
  logX: boolean;
  showIso: boolean;
  width?: number;
  height?: number;
}

export interface Marker {
  x: number;
  y: number;
  point: ChartPoint;
  optimal: boolean;
  emphasized: boolean;
}

export interface SeriesModel {
  arch: Arch;
  nRf: number | null;
  color: string;
  path: Array<[number, number]>;
  label: string;
}

export interface Tick {
  pos: number;
  label: string;
}

export interface ChartModel {
  width: number;
  height: number;
  plot: { left: number; right: number; top: number; bottom: number };
  series: SeriesModel[];
  markers: Marker[];
  xTicks: Tick[];
  yTicks: Tick[];
  isoLines: Array<{ label: string; path: Array<[number, number]> }>;
  winner: number;
  xLabel: string;
  yLabel: string;
}

export const ARCH_COLORS: Record<Arch, string> = {
  AC: "#d1495b",
  HC: "#1f6fb2",
  DC: "#2e933c",
};

const MARGIN = { left: 64, right: 24, top: 18, bottom: 46 };

function niceTicks(lo: number, hi: number, n = 5): number[] {
  if (hi <= lo) hi = lo + 1;
  const raw = (hi - lo) / n;
  const mag = Math.pow(10, Math.floor(Math.log10(raw)));
  const step = [1, 2, 2.5, 5, 10].map((s) => s * mag).find((s) => s >= raw)!;
  const ticks: number[] = [];
  for (let t = Math.ceil(lo / step) * step; t <= hi + 1e-12 * step; t += step) {
    ticks.push(Number(t.toPrecision(12)));
  }
  return ticks;
}

function logTicks(lo: number, hi: number): number[] {
  const ticks: number[] = [];
  for (let e = Math.floor(Math.log10(lo)); e <= Math.ceil(Math.log10(hi)); e++) {
    const t = Math.pow(10, e);
    if (t >= lo && t <= hi) ticks.push(t);
  }
  if (ticks.length < 2) return [lo, hi];
  return ticks;
}

export function fmt(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 1e4 || a < 1e-2) return v.toExponential(1);
  return String(Number(v.toPrecision(4)));
}

export function buildModel(doc: ChartDocument, opts: ChartOptions): ChartModel {
  const width = opts.width ?? 760;
  const height = opts.height ?? 520;
  const plot = {
    left: MARGIN.left,
    right: width - MARGIN.right,
    top: MARGIN.top,
    bottom: height - MARGIN.bottom,
  };

  const xs = doc.points.map((p) => p.ee_gbit_j);
  const ys = doc.points.map((p) => p.se_bit_s_hz);
  let xLo = opts.logX ? Math.min(...xs) / 1.3 : 0;
  let xHi = Math.max(...xs) * 1.06;
  const yLo = 0;
  const yHi = Math.max(...ys) * 1.06;
  if (xHi <= xLo) xHi = xLo + 1;

  const sx = (v: number) => {
    const t = opts.logX
      ? (Math.log10(v) - Math.log10(xLo)) / (Math.log10(xHi) - Math.log10(xLo))
      : (v - xLo) / (xHi - xLo);
    return plot.left + t * (plot.right - plot.left);
  };
  const sy = (v: number) =>
    plot.bottom - ((v - yLo) / (yHi - yLo)) * (plot.bottom - plot.top);

  const grouped = new Map<string, ChartPoint[]>();
  for (const pt of doc.points) {
    const key = `${pt.arch}/${pt.n_rf ?? ""}`;
    if (!grouped.has(key)) grouped.set(key, []);
    grouped.get(key)!.push(pt);
  }
  const series: SeriesModel[] = [...grouped.values()]
    .map((pts) => pts.slice().sort((a, b) => a.bits - b.bits))
    .sort((a, b) => {
      const ka = `${a[0]!.arch}/${a[0]!.n_rf ?? 0}`;
      const kb = `${b[0]!.arch}/${b[0]!.n_rf ?? 0}`;
      return ka < kb ? -1 : 1;
    })
    .map((pts) => {
      const head = pts[0]!;
      return {
        arch: head.arch,
        nRf: head.n_rf,
        color: ARCH_COLORS[head.arch],
        label: head.n_rf === null ? head.arch : `${head.arch} (N_RF=${head.n_rf})`,
        path: pts.map((p): [number, number] => [sx(p.ee_gbit_j), sy(p.se_bit_s_hz)]),
      };
    });

  const winner = winnerIndex(doc, opts.alpha);
  const markers: Marker[] = doc.points.map((pt) => ({
    x: sx(pt.ee_gbit_j),
    y: sy(pt.se_bit_s_hz),
    point: pt,
    optimal: pt.optimal,
    emphasized: pt.index === winner,
  }));

  const isoLines: ChartModel["isoLines"] = [];
  if (opts.showIso) {
    // SE = (P / B) * EE, with EE carried in Gbit/J on this axis
    const slope = (p: number) => (p / doc.scenario.bandwidth_hz) * 1e9;
    for (const p of doc.iso_power_w) {
      const path: Array<[number, number]> = [];
      for (let i = 0; i <= 32; i++) {
        const xv = xLo + ((xHi - xLo) * i) / 32;
        if (xv <= 0) continue;
        const yv = slope(p) * xv;
        if (yv > yHi) break;
        path.push([sx(xv), sy(yv)]);
      }
      if (path.length >= 2) isoLines.push({ label: `${fmt(p)} W`, path });
    }
  }

  const xTickVals = opts.logX ? logTicks(xLo, xHi) : niceTicks(xLo, xHi);
  const yTickVals = niceTicks(yLo, yHi);
  return {
    width,
    height,
    plot,
    series,
    markers,
    xTicks: xTickVals.map((t) => ({ pos: sx(t), label: fmt(t) })),
    yTicks: yTickVals.map((t) => ({ pos: sy(t), label: fmt(t) })),
    isoLines,
    winner,
    xLabel: `${doc.axes.x.quantity.replace("_", " ")} (${doc.axes.x.unit})`,
    yLabel: `${doc.axes.y.quantity.replace("_", " ")} (${doc.axes.y.unit})`,
  };
}

export function pointTitle(pt: ChartPoint): string {
  const nrf = pt.n_rf === null ? "" : ` N_RF=${pt.n_rf}`;
  return `${pt.arch} b=${pt.bits}${nrf} | SE ${fmt(pt.se_bit_s_hz)} bit/s/Hz | ` +
    `EE ${fmt(pt.ee_gbit_j)} Gbit/J | ${fmt(pt.total_power_w)} W`;
}

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function renderSvg(model: ChartModel): string {
  const out: string[] = [];
  out.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${model.width} ${model.height}" ` +
    `width="100%" role="img">`);
  const { plot } = model;
  for (const iso of model.isoLines) {
    const pts = iso.path.map(([x, y]) => `${x.toFixed(1)},${y.toFixed(1)}`).join(" ");
    out.push(`<polyline class="iso" fill="none" stroke="#999" stroke-dasharray="4 4" ` +
      `points="${pts}"/>`);
    const [ex, ey] = iso.path[iso.path.length - 1]!;
    out.push(`<text class="iso-label" x="${(ex - 4).toFixed(1)}" y="${(ey + 12).toFixed(1)}" ` +
      `font-size="10" fill="#888" text-anchor="end">${esc(iso.label)}</text>`);
  }
  out.push(`<line x1="${plot.left}" y1="${plot.bottom}" x2="${plot.right}" ` +
    `y2="${plot.bottom}" stroke="#333"/>`);
  out.push(`<line x1="${plot.left}" y1="${plot.top}" x2="${plot.left}" ` +
    `y2="${plot.bottom}" stroke="#333"/>`);
  for (const t of model.xTicks) {
    out.push(`<line x1="${t.pos.toFixed(1)}" y1="${plot.bottom}" x2="${t.pos.toFixed(1)}" ` +
      `y2="${plot.bottom + 5}" stroke="#333"/>`);
    out.push(`<text x="${t.pos.toFixed(1)}" y="${plot.bottom + 18}" font-size="11" ` +
      `text-anchor="middle">${esc(t.label)}</text>`);
  }
  for (const t of model.yTicks) {
    out.push(`<line x1="${plot.left - 5}" y1="${t.pos.toFixed(1)}" x2="${plot.left}" ` +
      `y2="${t.pos.toFixed(1)}" stroke="#333"/>`);
    out.push(`<text x="${plot.left - 8}" y="${(t.pos + 4).toFixed(1)}" font-size="11" ` +
      `text-anchor="end">${esc(t.label)}</text>`);
  }
  out.push(`<text x="${(plot.left + plot.right) / 2}" y="${model.height - 8}" ` +
    `font-size="12" text-anchor="middle">${esc(model.xLabel)}</text>`);
  out.push(`<text x="14" y="${(plot.top + plot.bottom) / 2}" font-size="12" ` +
    `text-anchor="middle" transform="rotate(-90 14 ${(plot.top + plot.bottom) / 2})">` +
    `${esc(model.yLabel)}</text>`);

  for (const s of model.series) {
    const pts = s.path.map(([x, y]) => `${x.toFixed(1)},${y.toFixed(1)}`).join(" ");
    out.push(`<polyline class="series" fill="none" stroke="${s.color}" ` +
      `stroke-width="1.5" points="${pts}"><title>${esc(s.label)}</title></polyline>`);
  }
  for (const m of model.markers) {
    const cx = m.x.toFixed(1);
    const cy = m.y.toFixed(1);
    const color = ARCH_COLORS[m.point.arch];
    if (m.emphasized) {
      out.push(`<circle class="halo" cx="${cx}" cy="${cy}" r="9" fill="none" ` +
        `stroke="#f4a100" stroke-width="3"/>`);
    }
    const cls = m.optimal ? "pt opt" : "pt";
    const r = m.optimal ? 4.5 : 3;
    const ring = m.optimal ? ` stroke="#222" stroke-width="1.5"` : "";
    out.push(`<circle class="${cls}" data-index="${m.point.index}" cx="${cx}" cy="${cy}" ` +
      `r="${r}" fill="${color}"${ring}><title>${esc(pointTitle(m.point))}</title></circle>`);
  }
  out.push("</svg>");
  return out.join("\n");
}
