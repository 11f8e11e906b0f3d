"""Matplotlib rendering of chart documents for reports.

The canonical SVG export is a fixed template; this module is the styled
report path (PNG/PDF/SVG via matplotlib) written alongside the delimited
output when the CLI is asked for a figure.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .export import ARCH_COLORS, EE_SCALE

_RC = {
    "figure.figsize": (8.2, 5.6),
    "figure.dpi": 130,
    "axes.labelsize": 12,
    "axes.titlesize": 13,
    "legend.fontsize": 9,
    "grid.alpha": 0.3,
    "lines.linewidth": 1.6,
}

_HC_STYLES = ("-", "--", "-.", ":", (0, (4, 1, 1, 1)))


def render_chart(doc: dict, path: str) -> None:
    """Render a chart document to ``path`` (format from the extension)."""
    series: dict[tuple[str, int | None], list[dict]] = {}
    for pt in doc["points"]:
        series.setdefault((pt["arch"], pt["n_rf"]), []).append(pt)

    with plt.rc_context(_RC):
        fig, ax = plt.subplots()
        hc_rank = 0
        for (arch, n_rf), pts in sorted(series.items(), key=lambda kv: (kv[0][0], kv[0][1] or 0)):
            pts = sorted(pts, key=lambda q: q["bits"])
            xs = [q["ee_gbit_j"] for q in pts]
            ys = [q["se_bit_s_hz"] for q in pts]
            style = "-"
            if arch == "HC":
                style = _HC_STYLES[hc_rank % len(_HC_STYLES)]
                hc_rank += 1
            label = arch if n_rf is None else f"{arch}, $N_{{RF}}$={n_rf}"
            ax.plot(xs, ys, linestyle=style, color=ARCH_COLORS[arch], marker="o",
                    markersize=4, label=label)
        opt = [pt for pt in doc["points"] if pt["optimal"]]
        ax.scatter([q["ee_gbit_j"] for q in opt], [q["se_bit_s_hz"] for q in opt],
                   s=130, facecolors="none", edgecolors="black", linewidths=1.4,
                   zorder=5, label="utility-optimal")

        bandwidth = doc["scenario"]["bandwidth_hz"]
        if doc["iso_power_w"]:
            x_hi = ax.get_xlim()[1]
            for p_iso in doc["iso_power_w"]:
                slope = p_iso / bandwidth * EE_SCALE
                ax.plot([0, x_hi], [0, slope * x_hi], linestyle=":", color="0.55",
                        linewidth=1.0)
                ax.annotate(f"{p_iso:g} W", (x_hi, slope * x_hi), fontsize=8,
                            color="0.45", ha="right", va="bottom")

        ax.set_xlabel("energy efficiency (Gbit/J)")
        ax.set_ylabel("spectral efficiency (bit/s/Hz)")
        name = doc["components"]["name"] or "custom components"
        ax.set_title(f'{doc["scenario"]["name"]} / {name}')
        ax.grid(True)
        ax.legend(loc="center left", bbox_to_anchor=(1.01, 0.5))
        fig.tight_layout()
        fig.savefig(path, bbox_inches="tight")
        plt.close(fig)
