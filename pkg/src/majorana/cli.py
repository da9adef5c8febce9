"""Command-line experiment runner.

Every experiment writes a JSON report plus CSV tables (and PNG figures for
sweep experiments) into the output directory and prints one line per
checked metric.  Exit code 0 means every check passed.

    majorana list
    majorana check-clifford --out reports
    majorana causality-scan --config run.ini --seed 3 --json
    majorana all --out reports

Config files are INI-style with one section per experiment; keys must
belong to the experiment's parameter schema:

    [causality-scan]
    ns = 8, 16, 32
    x0 = 1.0
    mass = 1.0
"""

from __future__ import annotations

import argparse
import configparser
import json
import sys
import time

from .experiments import EXPERIMENTS
from .report import print_records, write_report

# accepted configuration keys and their parsers, per experiment
_SCHEMAS = {
    "check-clifford": {},
    "theta-isometry": {"fields": int, "n": int, "length": float},
    "covering-map": {"trials": int, "param_range": float},
    "irreducibility": {},
    "fourier-unitarity": {"n": int, "length": float, "masses": "floats", "fields": int, "oracle_n": int},
    "fourier-diagonalization": {"n": int, "length": float, "masses": "floats"},
    "energy-transform": {"n": int, "length": float, "mode": int},
    "hankel-specialfns": {"l_max": int},
    "hankel-roundtrip": {"r_max": float, "n_r": int, "n_theta": int, "n_phi": int, "l_max": int, "mass": float},
    "angular-momentum": {"r_max": float, "n_r": int, "n_theta": int, "n_phi": int, "l_max": int, "mass": float},
    "evolve-dirac-residual": {"n": int, "length": float, "mass": float, "x0": float, "dts": "floats"},
    "boost-unitarity": {"mass": float, "width": float, "rapidities": "floats", "quad_nodes": int},
    "rotation-2pi-sign": {"l_max": int},
    "projective-signs": {"n": int, "length": float, "mass": float, "composites": int},
    "transition-delta": {"n": int, "length": float, "mass": float, "x0": float},
    "causality-scan": {"ns": "ints", "x0": float, "length": float, "mass": float},
}


def _parse_value(kind, raw: str):
    if kind is int:
        return int(raw)
    if kind is float:
        return float(raw)
    parts = [p.strip() for p in raw.split(",") if p.strip()]
    if kind == "ints":
        return [int(p) for p in parts]
    if kind == "floats":
        return [float(p) for p in parts]
    raise ValueError(f"unhandled parameter kind {kind}")


def load_config(path, experiment: str) -> dict:
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise SystemExit(f"error: cannot read config file {path}")
    if experiment not in parser:
        return {}
    schema = _SCHEMAS[experiment]
    params = {}
    for key, raw in parser[experiment].items():
        if key not in schema:
            raise SystemExit(f"error: unknown key '{key}' for experiment '{experiment}'")
        try:
            params[key] = _parse_value(schema[key], raw)
        except ValueError as exc:
            raise SystemExit(f"error: bad value for '{key}' in '{experiment}': {exc}")
    return params


def run_experiment(name: str, params: dict, seed: int, out: str, render: bool, as_json: bool):
    fn, _, _ = EXPERIMENTS[name]
    start = time.time()
    try:
        records, tables = fn(params, seed)
    except Exception as exc:  # numeric failures become failed records, not crashes
        from .report import ReportRecord

        records = [ReportRecord(name, f"exception: {type(exc).__name__}: {exc}", float("nan"), 0.0, False)]
        tables = []
    elapsed = time.time() - start
    for r in records:
        r.wall_time_s = elapsed
        r.parameters.setdefault("seed", seed)
    write_report(out, name, records, tables, render=render)
    if as_json:
        print(json.dumps({
            "experiment": name,
            "passed": all(r.passed for r in records),
            "records": [
                {"metric": r.metric, "value": r.value, "tolerance": r.tolerance, "passed": r.passed}
                for r in records
            ],
        }))
    else:
        print_records(records)
    return all(r.passed for r in records)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="majorana", description="numerical experiments for the real-spinor transform library"
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, desc, topic) in EXPERIMENTS.items():
        p = sub.add_parser(name, help=desc)
        _add_common(p)
    p_all = sub.add_parser("all", help="run every experiment")
    _add_common(p_all)
    sub.add_parser("list", help="list experiments, their topics and parameters")

    args = parser.parse_args(argv)
    if args.command == "list":
        for name, (_, desc, topic) in EXPERIMENTS.items():
            keys = ", ".join(_SCHEMAS[name]) or "-"
            print(f"{name:24s} [{topic}] {desc} (parameters: {keys})")
        return 0

    names = list(EXPERIMENTS) if args.command == "all" else [args.command]
    ok = True
    for name in names:
        params = load_config(args.config, name) if args.config else {}
        ok &= run_experiment(name, params, args.seed, args.out, not args.no_figures, args.json)
    return 0 if ok else 1


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--config", default=None, help="INI config file with per-experiment sections")
    p.add_argument("--seed", type=int, default=0, help="random seed for reproducible reports")
    p.add_argument("--out", default="reports", help="output directory for reports and tables")
    p.add_argument("--json", action="store_true", help="print a JSON summary line instead of text")
    p.add_argument("--no-figures", action="store_true", help="skip PNG rendering of sweep tables")


if __name__ == "__main__":
    sys.exit(main())
