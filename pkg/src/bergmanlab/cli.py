"""Config-driven experiment runner.

Subcommands:
  run CONFIG.json   execute one experiment; write report.json, per-series CSV
                    and rendered PNG figures into the output directory
  list              print built-in domains, symbol shortcuts and experiments

Exit codes: 0 pass/agreement, 1 input or computation error, 2 verdict
failure, 3 inconclusive.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import BergmanLabError, ConfigInvalid
from .experiments import EXPERIMENTS
from .reports import exit_code, write_report
from .shadow import INTERSECTION_PRESET_RADIUS
from .symbols import SYMBOL_SHORTCUTS, parse_symbol

TOP_LEVEL_KEYS = {"experiment", "domain", "symbols", "parameters", "output"}

DOMAIN_KEYS = {
    "bidisk": {"kind", "r_z", "r_w"},
    "ball": {"kind", "R"},
    "intersection": {"kind", "r_z", "r_w", "R"},
    "sampled": {"kind", "points"},
    "paper-intersection": {"kind"},
}

NEEDS_DOMAIN = {"lemma3", "lemma1", "eqn3", "ray", "paper_g", "spectra", "dichotomy"}

PARAMETER_KEYS = {
    "lemma3": {"y0", "approach", "count"},
    "lemma4": {"cutoff", "radii", "compact_radius"},
    "lemma5": {"epsilon", "radius", "series"},
    "lemma6": {"r0", "radii"},
    "lemma1": {"instances", "seed", "max_exponent", "degree", "tolerance"},
    "eqn3": {"tolerance"},
    "ray": {"m_max", "jobs"},
    "paper_g": {"j_max", "alphas", "taylor_degree", "tail_tol", "jobs"},
    "spectra": {"n_z", "n_w_list"},
    "dichotomy": {"m_max", "n_z", "n_w_list", "jobs"},
}

SYMBOL_NAMES = {"phi", "psi", "f1", "f2", "g"}
TERM_KEYS = {"coeff_re", "coeff_im", "a", "b", "c", "d"}
OUTPUT_KEYS = {"path", "format"}
FORMATS = ("json", "csv", "both")


def validate_config(config: dict) -> dict:
    """Schema-check a config mapping and return it with the preset expanded.

    Unknown fields anywhere are rejected; the experiment decides which
    sections are required.
    """
    if not isinstance(config, dict):
        raise ConfigInvalid("config must be a JSON object")
    unknown = set(config) - TOP_LEVEL_KEYS
    if unknown:
        raise ConfigInvalid(f"unknown top-level fields: {sorted(unknown)}")
    experiment = config.get("experiment")
    if experiment is None:
        raise ConfigInvalid("missing required field 'experiment'")
    if experiment not in EXPERIMENTS:
        raise ConfigInvalid(
            f"unknown experiment {experiment!r}; choose from {sorted(EXPERIMENTS)}"
        )
    if experiment in NEEDS_DOMAIN:
        if "domain" not in config:
            raise ConfigInvalid(
                f"missing required field 'domain' (experiment {experiment!r})"
            )
        domain = config["domain"]
        if not isinstance(domain, dict) or "kind" not in domain:
            raise ConfigInvalid("domain must be an object with a 'kind' field")
        kind = domain["kind"]
        if kind not in DOMAIN_KEYS:
            raise ConfigInvalid(
                f"unknown domain kind {kind!r}; choose from {sorted(DOMAIN_KEYS)}"
            )
        extra = set(domain) - DOMAIN_KEYS[kind]
        if extra:
            raise ConfigInvalid(f"unknown domain fields for {kind!r}: {sorted(extra)}")
        if kind == "paper-intersection":
            config = dict(config)
            config["domain"] = {
                "kind": "intersection",
                "r_z": 1.0,
                "r_w": 1.0,
                "R": INTERSECTION_PRESET_RADIUS,
            }
    symbols = config.get("symbols", {})
    if not isinstance(symbols, dict):
        raise ConfigInvalid("symbols must be an object")
    for name, spec in symbols.items():
        if name not in SYMBOL_NAMES:
            raise ConfigInvalid(
                f"unknown symbol slot {name!r}; choose from {sorted(SYMBOL_NAMES)}"
            )
        if isinstance(spec, str):
            if spec not in SYMBOL_SHORTCUTS:
                raise ConfigInvalid(f"unknown symbol shortcut {spec!r} for {name!r}")
        elif isinstance(spec, list):
            for entry in spec:
                if not isinstance(entry, dict):
                    raise ConfigInvalid(f"symbol {name!r} terms must be objects")
                extra = set(entry) - TERM_KEYS
                if extra:
                    raise ConfigInvalid(
                        f"unknown term fields in symbol {name!r}: {sorted(extra)}"
                    )
            try:
                parse_symbol(spec)
            except (ValueError, TypeError) as exc:
                raise ConfigInvalid(f"symbol {name!r}: {exc}") from exc
        else:
            raise ConfigInvalid(f"symbol {name!r} must be a shortcut or a term list")
    params = config.get("parameters", {})
    if not isinstance(params, dict):
        raise ConfigInvalid("parameters must be an object")
    allowed = PARAMETER_KEYS[experiment]
    extra = set(params) - allowed
    if extra:
        raise ConfigInvalid(
            f"unknown parameters for {experiment!r}: {sorted(extra)} "
            f"(allowed: {sorted(allowed)})"
        )
    output = config.get("output", {})
    if not isinstance(output, dict):
        raise ConfigInvalid("output must be an object")
    extra = set(output) - OUTPUT_KEYS
    if extra:
        raise ConfigInvalid(f"unknown output fields: {sorted(extra)}")
    fmt = output.get("format", "both")
    if fmt not in FORMATS:
        raise ConfigInvalid(f"output format must be one of {FORMATS}")
    return config


def normalize_config(config: dict, args) -> dict:
    """Apply flag overrides and fill the sections the runners expect."""
    config = dict(config)
    config.setdefault("symbols", {})
    params = dict(config.get("parameters", {}))
    experiment = config["experiment"]
    if args.m_max is not None and "m_max" in PARAMETER_KEYS[experiment]:
        params["m_max"] = args.m_max
    if args.truncation is not None and "n_z" in PARAMETER_KEYS[experiment]:
        params["n_z"] = args.truncation
    if args.tol is not None and "tolerance" in PARAMETER_KEYS[experiment]:
        params["tolerance"] = args.tol
    if args.jobs is not None and "jobs" in PARAMETER_KEYS[experiment]:
        params["jobs"] = args.jobs
    config["parameters"] = params
    output = dict(config.get("output", {}))
    if args.out is not None:
        output["path"] = args.out
    if args.format is not None:
        output["format"] = args.format
    output.setdefault("path", "bergmanlab-out")
    output.setdefault("format", "both")
    config["output"] = output
    return config


def catalog() -> dict:
    return {
        "domains": {
            "bidisk": ["r_z", "r_w"],
            "ball": ["R"],
            "intersection": ["r_z", "r_w", "R"],
            "sampled": ["points"],
        },
        "presets": {
            "paper-intersection": {
                "kind": "intersection",
                "r_z": 1.0,
                "r_w": 1.0,
                "R": INTERSECTION_PRESET_RADIUS,
            }
        },
        "symbols": sorted(SYMBOL_SHORTCUTS),
        "experiments": sorted(EXPERIMENTS),
    }


def _cmd_list() -> int:
    cat = catalog()
    print("domains:")
    for name, params in cat["domains"].items():
        print(f"  {name}  parameters: {', '.join(params)}")
    print("presets:")
    for name, spec in cat["presets"].items():
        detail = ", ".join(f"{k}={v:.6f}" if isinstance(v, float) else f"{k}={v}"
                           for k, v in spec.items() if k != "kind")
        print(f"  {name}  ({spec['kind']}: {detail})")
    print("symbol shortcuts:")
    print("  " + ", ".join(cat["symbols"]))
    print("experiments:")
    print("  " + ", ".join(cat["experiments"]))
    return 0


def _cmd_run(args) -> int:
    try:
        with open(args.config) as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return 1
    try:
        config = validate_config(raw)
        config = normalize_config(config, args)
        runner = EXPERIMENTS[config["experiment"]]
        report = runner(config)
    except ConfigInvalid as exc:
        print(f"error: invalid config: {exc}", file=sys.stderr)
        return 1
    except BergmanLabError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, TypeError) as exc:
        print(f"error: invalid parameter: {exc}", file=sys.stderr)
        return 1
    out_dir = config["output"]["path"]
    fmt = config["output"]["format"]
    paths = write_report(report, out_dir, fmt)
    summary = f"{report.experiment}: status={report.status}"
    if report.verdict:
        summary += f" verdict={report.verdict}"
    if report.agreement is not None:
        summary += f" agreement={report.agreement}"
    print(summary)
    for path in paths:
        print(f"  wrote {path}")
    return exit_code(report)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="bergmanlab",
        description="Finite-section operator experiments on Bergman spaces of "
        "Reinhardt domains in C^2",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    run_p = sub.add_parser("run", help="run an experiment from a JSON config")
    run_p.add_argument("config", help="path to the experiment config")
    run_p.add_argument("--out", help="output directory", default=None)
    run_p.add_argument("--jobs", type=int, default=None, help="worker cap")
    run_p.add_argument("--truncation", type=int, default=None,
                       help="override the z-truncation degree")
    run_p.add_argument("--m-max", dest="m_max", type=int, default=None,
                       help="override the ray length")
    run_p.add_argument("--tol", type=float, default=None,
                       help="override the residual tolerance")
    run_p.add_argument("--format", choices=FORMATS, default=None)
    sub.add_parser("list", help="print the built-in catalog")
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; keep 2 reserved for verdict failures
        return 0 if exc.code in (0, None) else 1
    if args.command == "list":
        return _cmd_list()
    return _cmd_run(args)


if __name__ == "__main__":
    sys.exit(main())
