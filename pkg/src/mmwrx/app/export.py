"""Chart document construction and json/csv/svg serialization.

The JSON document is the canonical schema ("schema": "v1", stable key
order); CSV and SVG are derived views. SVG rendering is a fixed template
(versioned below) with one ``<circle class="pt">`` per point so documents
are reproducible byte-for-byte from a config and can be checked by count.
"""

from __future__ import annotations

import csv
import io
import json

from ..power import ComponentPowerSet
from ..presets import components_to_dict, scenario_to_dict
from ..tradeoff import SweepResult

SCHEMA_VERSION = "v1"
SVG_TEMPLATE_VERSION = "v1"
EE_SCALE = 1e9  # report energy efficiency in Gbit/J

AXES = {
    "x": {"quantity": "energy_efficiency", "unit": "Gbit/J", "scale": "linear"},
    "y": {"quantity": "spectral_efficiency", "unit": "bit/s/Hz", "scale": "linear"},
}

FORMATS = ("json", "csv", "svg")


def chart_document(result: SweepResult, components: ComponentPowerSet,
                   iso_power_w: list[float] | None = None) -> dict:
    """Assemble the canonical chart dictionary from a sweep result."""
    if not result.points:
        raise ValueError("sweep result has no points")
    optimal = {iv.point_index for iv in result.optimal_set}
    points = []
    for i, pt in enumerate(result.points):
        points.append({
            "index": i,
            "arch": pt.arch,
            "bits": pt.bits,
            "n_rf": pt.n_rf,
            "se_bit_s_hz": pt.se,
            "ee_gbit_j": pt.ee / EE_SCALE,
            "mean_rate_bit_s": pt.mean_rate,
            "total_power_w": pt.total_power,
            "rate_std_err_bit_s": pt.rate_std_err,
            "trial_count": pt.trial_count,
            "optimal": i in optimal,
        })
    return {
        "schema": SCHEMA_VERSION,
        "scenario": scenario_to_dict(result.scenario),
        "components": components_to_dict(components),
        "axes": AXES,
        "points": points,
        "optimal_set": [
            {"alpha_min": iv.alpha_min, "alpha_max": iv.alpha_max, "point_index": iv.point_index}
            for iv in result.optimal_set
        ],
        "iso_power_w": list(iso_power_w) if iso_power_w else [],
    }


def to_json_bytes(doc: dict) -> bytes:
    return (json.dumps(doc, indent=2) + "\n").encode()


CSV_COLUMNS = ("index", "arch", "bits", "n_rf", "se_bit_s_hz", "ee_gbit_j",
               "mean_rate_bit_s", "total_power_w", "rate_std_err_bit_s",
               "trial_count", "optimal")


def to_csv(doc: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(CSV_COLUMNS)
    for pt in doc["points"]:
        writer.writerow([
            pt["index"], pt["arch"], pt["bits"],
            "" if pt["n_rf"] is None else pt["n_rf"],
            repr(pt["se_bit_s_hz"]), repr(pt["ee_gbit_j"]),
            repr(pt["mean_rate_bit_s"]), repr(pt["total_power_w"]),
            repr(pt["rate_std_err_bit_s"]), pt["trial_count"],
            "true" if pt["optimal"] else "false",
        ])
    return buf.getvalue()


def export_chart(result: SweepResult, fmt: str, components: ComponentPowerSet,
                 iso_power_w: list[float] | None = None) -> bytes:
    """Serialize a sweep result as json, csv, or svg bytes."""
    if fmt not in FORMATS:
        raise ValueError(f"unsupported format {fmt!r}; expected one of {FORMATS}")
    doc = chart_document(result, components, iso_power_w)
    if fmt == "json":
        return to_json_bytes(doc)
    if fmt == "csv":
        return to_csv(doc).encode()
    return to_svg(doc).encode()


# --- static SVG ---------------------------------------------------------

ARCH_COLORS = {"AC": "#d1495b", "HC": "#1f6fb2", "DC": "#2e933c"}
_W, _H = 860, 560
_ML, _MR, _MT, _MB = 70, 190, 42, 58


def _nice_ticks(lo: float, hi: float, n: int = 5) -> list[float]:
    if hi <= lo:
        hi = lo + 1.0
    import math
    raw = (hi - lo) / n
    mag = 10.0 ** math.floor(math.log10(raw))
    step = next(s * mag for s in (1, 2, 2.5, 5, 10) if s * mag >= raw)
    start = math.ceil(lo / step) * step
    ticks = []
    t = start
    while t <= hi + 1e-12 * step:
        ticks.append(round(t, 12))
        t += step
    return ticks


def _fmt(v: float) -> str:
    return f"{v:.6g}"


def to_svg(doc: dict) -> str:
    points = doc["points"]
    xs = [pt["ee_gbit_j"] for pt in points]
    ys = [pt["se_bit_s_hz"] for pt in points]
    pad_x = 0.06 * (max(xs) - min(xs) or max(xs) or 1.0)
    pad_y = 0.06 * (max(ys) - min(ys) or max(ys) or 1.0)
    x0, x1 = min(0.0, min(xs)) , max(xs) + pad_x
    y0, y1 = min(0.0, min(ys)), max(ys) + pad_y

    def sx(v):
        return _ML + (v - x0) / (x1 - x0) * (_W - _ML - _MR)

    def sy(v):
        return _H - _MB - (v - y0) / (y1 - y0) * (_H - _MT - _MB)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}">',
        f'<!-- mmwrx chart template {SVG_TEMPLATE_VERSION} -->',
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
    ]

    # iso-power guides: SE = (P/B) * EE, EE in Gbit/J on this axis
    bandwidth = doc["scenario"]["bandwidth_hz"]
    for p_iso in doc["iso_power_w"]:
        slope = p_iso / bandwidth * EE_SCALE
        pts = []
        for xe in (x0, x1):
            pts.append((xe, slope * xe))
        (xa, ya), (xb, yb) = pts
        out.append(
            f'<line class="iso" x1="{_fmt(sx(xa))}" y1="{_fmt(sy(ya))}" '
            f'x2="{_fmt(sx(xb))}" y2="{_fmt(sy(yb))}" stroke="#999999" '
            f'stroke-dasharray="4 4" stroke-width="1"/>')
        out.append(
            f'<text x="{_fmt(sx(x1) - 4)}" y="{_fmt(max(sy(slope * x1) - 4, _MT))}" '
            f'font-size="10" fill="#777777" text-anchor="end">{_fmt(p_iso)} W</text>')

    # axes
    out.append(f'<line x1="{_ML}" y1="{_H - _MB}" x2="{_W - _MR}" y2="{_H - _MB}" '
               f'stroke="black" stroke-width="1"/>')
    out.append(f'<line x1="{_ML}" y1="{_MT}" x2="{_ML}" y2="{_H - _MB}" '
               f'stroke="black" stroke-width="1"/>')
    for t in _nice_ticks(x0, x1):
        out.append(f'<line x1="{_fmt(sx(t))}" y1="{_H - _MB}" x2="{_fmt(sx(t))}" '
                   f'y2="{_H - _MB + 5}" stroke="black" stroke-width="1"/>')
        out.append(f'<text x="{_fmt(sx(t))}" y="{_H - _MB + 18}" font-size="11" '
                   f'text-anchor="middle">{_fmt(t)}</text>')
    for t in _nice_ticks(y0, y1):
        out.append(f'<line x1="{_ML - 5}" y1="{_fmt(sy(t))}" x2="{_ML}" '
                   f'y2="{_fmt(sy(t))}" stroke="black" stroke-width="1"/>')
        out.append(f'<text x="{_ML - 8}" y="{_fmt(sy(t) + 4)}" font-size="11" '
                   f'text-anchor="end">{_fmt(t)}</text>')
    out.append(f'<text x="{(_ML + _W - _MR) / 2}" y="{_H - 16}" font-size="13" '
               f'text-anchor="middle">energy efficiency (Gbit/J)</text>')
    out.append(f'<text x="18" y="{(_MT + _H - _MB) / 2}" font-size="13" text-anchor="middle" '
               f'transform="rotate(-90 18 {(_MT + _H - _MB) / 2})">'
               f'spectral efficiency (bit/s/Hz)</text>')
    title = f'{doc["scenario"]["name"]} / {doc["components"]["name"] or "custom components"}'
    out.append(f'<text x="{(_ML + _W - _MR) / 2}" y="24" font-size="14" '
               f'text-anchor="middle">{title}</text>')

    # one polyline per (arch, n_rf), points ordered by bits
    series: dict[tuple[str, int | None], list[dict]] = {}
    for pt in points:
        series.setdefault((pt["arch"], pt["n_rf"]), []).append(pt)
    legend_y = _MT + 8
    for (arch, n_rf), pts in sorted(series.items(), key=lambda kv: (kv[0][0], kv[0][1] or 0)):
        pts = sorted(pts, key=lambda q: q["bits"])
        color = ARCH_COLORS[arch]
        path = " ".join(f"{_fmt(sx(q['ee_gbit_j']))},{_fmt(sy(q['se_bit_s_hz']))}" for q in pts)
        out.append(f'<polyline class="series" fill="none" stroke="{color}" '
                   f'stroke-width="1.5" points="{path}"/>')
        label = arch if n_rf is None else f"{arch} (N_RF={n_rf})"
        lx = _W - _MR + 14
        out.append(f'<rect x="{lx}" y="{legend_y - 9}" width="14" height="3" fill="{color}"/>')
        out.append(f'<text x="{lx + 20}" y="{legend_y - 4}" font-size="11">{label}</text>')
        legend_y += 16
    out.append(f'<circle cx="{_W - _MR + 21}" cy="{legend_y - 5}" r="5" fill="none" '
               f'stroke="#222222" stroke-width="1.5"/>')
    out.append(f'<text x="{_W - _MR + 34}" y="{legend_y - 1}" font-size="11">'
               f'utility-optimal</text>')

    # one marker element per point; optimal points carry a highlight ring
    for pt in points:
        cx, cy = _fmt(sx(pt["ee_gbit_j"])), _fmt(sy(pt["se_bit_s_hz"]))
        color = ARCH_COLORS[pt["arch"]]
        if pt["optimal"]:
            out.append(f'<circle class="pt opt" cx="{cx}" cy="{cy}" r="4.5" fill="{color}" '
                       f'stroke="#222222" stroke-width="1.5"/>')
        else:
            out.append(f'<circle class="pt" cx="{cx}" cy="{cy}" r="3" fill="{color}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
