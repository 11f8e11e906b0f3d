"""Command line interface: ``presets``, ``sweep``, and ``serve``.

Exit codes: 0 success, 1 unreadable/unparsable config, 2 invalid scenario or
preset, 3 I/O failure writing outputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from pydantic import ValidationError

from ..presets import (
    UnknownPresetError,
    component_presets,
    components_to_dict,
    scenario_presets,
    scenario_to_dict,
)
from ..tradeoff import sweep as run_sweep
from .config import RunConfig, describe_validation_error
from .export import FORMATS, chart_document, export_chart

EXIT_CONFIG = 1
EXIT_INVALID = 2
EXIT_IO = 3


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _validation_message(exc: ValidationError) -> str:
    field, msg = describe_validation_error(exc)
    return f"invalid {field}: {msg}" if field != "body" else msg


def _parse_int_list(text: str) -> list[int]:
    """Accept "2,4,8" or a range "1-8"."""
    if "-" in text and "," not in text:
        lo, hi = text.split("-", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(tok) for tok in text.split(",") if tok]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mmwrx",
        description="SE vs EE trade-off sweeps for quantized mmWave receivers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_presets = sub.add_parser("presets", help="list shipped scenario and component presets")
    p_presets.add_argument("--json", action="store_true", help="print the catalog as JSON")

    p_sweep = sub.add_parser("sweep", help="run a sweep and export the chart")
    p_sweep.add_argument("--config", help="JSON config file (flags override its fields)")
    p_sweep.add_argument("--preset", help="scenario preset name")
    p_sweep.add_argument("--components", help="component preset name or JSON file path")
    p_sweep.add_argument("--out", help="output file (chart document)")
    p_sweep.add_argument("--format", choices=FORMATS,
                         help="output format; default inferred from --out extension")
    p_sweep.add_argument("--fig", help="also render a matplotlib figure to this file")
    p_sweep.add_argument("--trials", type=int, help="Monte Carlo trials per candidate")
    p_sweep.add_argument("--seed", type=int, help="base seed for the trial sequence")
    p_sweep.add_argument("--snr-db", type=float, help="SNR before combining in dB")
    p_sweep.add_argument("--bandwidth-hz", type=float, help="signal bandwidth in Hz")
    p_sweep.add_argument("--bits", help='ADC bit sweep, e.g. "1-8" or "2,4,6"')
    p_sweep.add_argument("--nrf", help='RF chain counts for HC, e.g. "2,4,8"')
    p_sweep.add_argument("--arch", help='architectures to sweep, e.g. "AC,DC"')
    p_sweep.add_argument("--iso-power", help='iso-power guide lines in Watts, e.g. "1,3,8"')

    p_serve = sub.add_parser("serve", help="run the HTTP API")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--bind", default="127.0.0.1")
    p_serve.add_argument("--max-evals", type=int, default=1_000_000,
                         help="reject sweeps above this many trial-evaluations")
    return parser


def _cmd_presets(args) -> int:
    scenarios = {name: scenario_to_dict(s) for name, s in scenario_presets().items()}
    components = {name: components_to_dict(c) for name, c in component_presets().items()}
    if args.json:
        print(json.dumps({"scenarios": scenarios, "components": components}, indent=2))
        return 0
    print("scenario presets:")
    for name, raw in scenarios.items():
        print(f"  {name:<10} N_t={raw['n_tx']:>3}  N_r={raw['n_rx']:>3}  "
              f"SNR={raw['snr_db']:>6.1f} dB  B={raw['bandwidth_hz']:.3g} Hz  "
              f"N_RF={raw['nrf_set']}")
    print("component presets:")
    for name, raw in components.items():
        print(f"  {name:<10} adc_fom={raw['adc_fom_j_per_step_hz']:.3g} J/step/Hz  "
              f"P_PS={raw['p_ps_w'] * 1e3:g} mW")
    return 0


def _load_run_config(args) -> RunConfig:
    raw: dict = {}
    if args.config:
        raw = json.loads(Path(args.config).read_text())
    if args.preset:
        scenario = raw.get("scenario")
        if isinstance(scenario, dict):
            scenario["preset"] = args.preset
        else:
            raw["scenario"] = args.preset
    if args.components:
        path = Path(args.components)
        if path.suffix == ".json" or path.exists():
            raw["components"] = json.loads(path.read_text())
        else:
            raw["components"] = args.components

    overrides = {
        "n_trials": args.trials,
        "base_seed": args.seed,
        "snr_db": args.snr_db,
        "bandwidth_hz": args.bandwidth_hz,
        "bit_range": _parse_int_list(args.bits) if args.bits else None,
        "nrf_set": _parse_int_list(args.nrf) if args.nrf else None,
        "architectures": args.arch.split(",") if args.arch else None,
    }
    overrides = {k: v for k, v in overrides.items() if v is not None}
    if overrides:
        scenario = raw.get("scenario")
        if isinstance(scenario, str):
            raw["scenario"] = {"preset": scenario, **overrides}
        elif isinstance(scenario, dict):
            scenario.update(overrides)
        else:
            raw["scenario"] = overrides

    if args.iso_power:
        raw["iso_power_w"] = [float(tok) for tok in args.iso_power.split(",") if tok]
    if args.out:
        raw["output_path"] = args.out
    if args.format:
        raw["output"] = args.format
    if args.fig:
        raw["figure_path"] = args.fig
    return RunConfig(**raw)


def _print_summary(doc: dict) -> None:
    points = doc["points"]
    print(f"sweep: {doc['scenario']['name']} with "
          f"{doc['components']['name'] or 'custom components'}; "
          f"{len(points)} candidates, {doc['scenario']['n_trials']} trials")
    print(f"{'alpha range':<22} {'arch':<5} {'bits':>4} {'N_RF':>5} "
          f"{'SE bit/s/Hz':>12} {'EE Gbit/J':>10} {'power W':>9}")
    for iv in doc["optimal_set"]:
        pt = points[iv["point_index"]]
        nrf = "-" if pt["n_rf"] is None else str(pt["n_rf"])
        print(f"[{iv['alpha_min']:.3f}, {iv['alpha_max']:.3f}]{'':<6} {pt['arch']:<5} "
              f"{pt['bits']:>4} {nrf:>5} {pt['se_bit_s_hz']:>12.3f} "
              f"{pt['ee_gbit_j']:>10.3f} {pt['total_power_w']:>9.4f}")


def _cmd_sweep(args) -> int:
    try:
        config = _load_run_config(args)
    except (OSError, json.JSONDecodeError) as exc:
        return _fail(EXIT_CONFIG, f"cannot read config: {exc}")
    except ValidationError as exc:
        return _fail(EXIT_INVALID, _validation_message(exc))

    try:
        scenario, components = config.request().resolve()
    except ValidationError as exc:
        return _fail(EXIT_INVALID, _validation_message(exc))
    except (UnknownPresetError, ValueError) as exc:
        message = exc.args[0] if exc.args else str(exc)
        return _fail(EXIT_INVALID, str(message))

    result = run_sweep(scenario, components)
    doc = chart_document(result, components, config.iso_power_w)

    if config.output_path:
        fmt = config.output or Path(config.output_path).suffix.lstrip(".").lower()
        if fmt not in FORMATS:
            return _fail(EXIT_INVALID, f"unsupported output format {fmt!r}")
        try:
            Path(config.output_path).write_bytes(
                export_chart(result, fmt, components, config.iso_power_w))
        except OSError as exc:
            return _fail(EXIT_IO, f"cannot write output_path: {exc}")
    if config.figure_path:
        from .figures import render_chart
        try:
            render_chart(doc, config.figure_path)
        except OSError as exc:
            return _fail(EXIT_IO, f"cannot write figure_path: {exc}")

    _print_summary(doc)
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    try:
        uvicorn.run(create_app(max_trial_evals=args.max_evals),
                    host=args.bind, port=args.port, log_level="info")
    except (OSError, SystemExit):
        # uvicorn turns bind failures into SystemExit
        return _fail(EXIT_IO, f"cannot serve on {args.bind}:{args.port}")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "presets":
        return _cmd_presets(args)
    if args.command == "sweep":
        return _cmd_sweep(args)
    return _cmd_serve(args)


if __name__ == "__main__":
    sys.exit(main())
