"""``poisson-sinr`` command line: ``simulate``, ``fluid`` and ``compare``.

Exit status: 0 success, 1 shift above ``--threshold-db``, 2 bad
configuration or input file, 3 numerical failure.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import os
import sys
from pathlib import Path

from .errors import CampaignError, NumericalError, ParameterError
from .files import CdfFileError, read_cdf_csv, write_cdf_csv, write_json
from .fluid import FluidCdf, cell_average_throughput, cell_edge_throughput
from .montecarlo import (cdf_horizontal_shift_dB, empirical_cdf, outage_probability,
                         run_campaign)
from .scenario import Scenario, load_scenario

log = logging.getLogger("poisson_sinr")

OUT_ENV = "POISSON_SINR_OUT"
EXIT_OK, EXIT_THRESHOLD, EXIT_CONFIG, EXIT_NUMERIC = 0, 1, 2, 3


def cdf_filename(eta, sigma_dB, association):
    return f"cdf_eta{eta:g}_sigma{sigma_dB:g}_{association}.csv"


def fluid_filename(eta, modified):
    return f"fluid_{'modified' if modified else 'plain'}_eta{eta:g}.csv"


def _resolve_scenario(args) -> Scenario:
    scenario = load_scenario(args.scenario) if args.scenario else Scenario()
    if args.seed is not None:
        scenario = dataclasses.replace(scenario, base=scenario.base.replace(seed=args.seed))
    return scenario


def _out_dir(args, scenario) -> Path:
    out = Path(args.out or os.environ.get(OUT_ENV) or scenario.output_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise ParameterError(f"cannot create output directory {out}: {exc}") from exc
    return out


def cmd_simulate(args) -> int:
    scenario = _resolve_scenario(args)
    out = _out_dir(args, scenario)
    workers = args.workers or os.cpu_count() or 1
    cdfs, entries = {}, []
    for eta in scenario.eta:
        for sigma in scenario.sigma_dB:
            config = scenario.network_config(eta, sigma)
            for assoc in scenario.association:
                log.info("simulate eta=%g sigma=%g %s", eta, sigma, assoc)
                samples = run_campaign(config, assoc, workers=workers)
                cdf = empirical_cdf(samples)
                name = cdf_filename(eta, sigma, assoc)
                write_cdf_csv(out / name, cdf)
                cdfs[eta, sigma, assoc] = cdf
                entries.append({
                    "file": name, "eta": eta, "sigma_dB": sigma, "association": assoc,
                    "n_samples": len(samples), "n_skipped": samples.n_skipped,
                    "n_empty_runs": samples.n_empty_runs, "n_infinite": samples.n_infinite,
                    "outage": {f"{t:g}": outage_probability(cdf, t)
                               for t in scenario.outage_thresholds_dB},
                })
    for entry in entries:
        key = entry["eta"], entry["sigma_dB"], entry["association"]
        reference = cdfs.get((key[0], 0.0, key[2]))
        if reference is not None:
            entry["shift_vs_no_shadowing_dB"] = cdf_horizontal_shift_dB(
                reference, cdfs[key], scenario.p_lo, scenario.p_hi).max_shift_dB
        fluid = FluidCdf(scenario.fluid_params(key[0]), modified=True)
        entry["shift_vs_modified_fluid_dB"] = cdf_horizontal_shift_dB(
            fluid, cdfs[key], scenario.p_lo, scenario.p_hi).max_shift_dB
    write_json(out / "summary.json", {"command": "simulate", "scenario": scenario.echo(),
                                      "results": entries})
    return EXIT_OK


def cmd_fluid(args) -> int:
    scenario = _resolve_scenario(args)
    out = _out_dir(args, scenario)
    entries = []
    for eta in scenario.eta:
        params = scenario.fluid_params(eta)
        for modified in (False, True):
            write_cdf_csv(out / fluid_filename(eta, modified), FluidCdf(params, modified))
        entries.append({
            "eta": eta, "rho_bs": params.rho_bs, "correction": params.correction,
            "cell_edge_throughput": cell_edge_throughput(params),
            "cell_average_throughput": cell_average_throughput(params),
            "files": [fluid_filename(eta, False), fluid_filename(eta, True)],
        })
    write_json(out / "fluid_summary.json", {"command": "fluid", "scenario": scenario.echo(),
                                            "results": entries})
    return EXIT_OK


def cmd_compare(args) -> int:
    cdf_a, cdf_b = read_cdf_csv(args.cdf_a), read_cdf_csv(args.cdf_b)
    try:
        report = cdf_horizontal_shift_dB(cdf_a, cdf_b, args.p_lo, args.p_hi)
    except ValueError as exc:
        raise ParameterError(str(exc)) from exc
    payload = {"cdf_a": str(args.cdf_a), "cdf_b": str(args.cdf_b),
               "p_lo": args.p_lo, "p_hi": args.p_hi, **report.to_dict()}
    status = EXIT_OK
    if args.threshold_db is not None:
        payload["threshold_dB"] = args.threshold_db
        payload["pass"] = report.max_shift_dB <= args.threshold_db
        status = EXIT_OK if payload["pass"] else EXIT_THRESHOLD
    text = json.dumps(payload, indent=2, sort_keys=True)
    if args.out:
        Path(args.out).mkdir(parents=True, exist_ok=True)
        (Path(args.out) / "compare.json").write_text(text + "\n")
    print(text)
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="poisson-sinr", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scenario", help="scenario file (key = value lines)")
    common.add_argument("--seed", type=int, help="override the scenario seed")
    common.add_argument("--out", help=f"output directory (else ${OUT_ENV}, else scenario)")

    sim = sub.add_parser("simulate", parents=[common], help="run Monte Carlo campaigns")
    sim.add_argument("--workers", type=int, help="worker processes (default: all CPUs)")
    sim.set_defaults(func=cmd_simulate)

    fl = sub.add_parser("fluid", parents=[common], help="analytic fluid-model CDFs")
    fl.set_defaults(func=cmd_fluid)

    cmp_ = sub.add_parser("compare", help="horizontal shift between two CDF files")
    cmp_.add_argument("cdf_a")
    cmp_.add_argument("cdf_b")
    cmp_.add_argument("--p-lo", type=float, default=0.05)
    cmp_.add_argument("--p-hi", type=float, default=0.95)
    cmp_.add_argument("--threshold-db", type=float)
    cmp_.add_argument("--out", help="also write compare.json here")
    cmp_.set_defaults(func=cmd_compare)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (ParameterError, CdfFileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (NumericalError, CampaignError, FloatingPointError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
