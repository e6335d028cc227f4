"""Command-line entry point.

Two forms::

    pearson-kmeans --data FILE [--variant protocol|standard|pearson] [...]
    pearson-kmeans devils-advocate [--runs N] [--seed S] [...]

On failure the last line on stderr is a JSON object
``{"error": <code>, "message": <text>}`` and the exit status is 1
(2 for usage errors, as usual for argparse).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from ._random import check_seed
from .datagen import INIT_MODES, PROBE_TEMPLATES, DevilsAdvocateConfig
from .errors import ClusteringError
from .experiment import run_devils_advocate, run_protocol, run_variant
from .kmeans import KMeansVariant
from .report import emit_report
from .series_core import NormalizationConvention
from .ucr import load_ucr

logger = logging.getLogger("pearson_kmeans")


def _seed(text: str) -> int:
    try:
        return check_seed(int(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _sigma(text: str) -> float:
    value = float(text)
    if not value >= 0:
        raise argparse.ArgumentTypeError(f"noise level must be >= 0, got {text}")
    return value


def _add_common(p: argparse.ArgumentParser, default_runs: int) -> None:
    p.add_argument("--runs", type=_positive, default=default_runs,
                   help=f"number of repetitions (default {default_runs})")
    p.add_argument("--seed", type=_seed, default=0, help="base seed, unsigned 64-bit")
    p.add_argument("--max-iters", type=_positive, default=300)
    p.add_argument("--format", choices=["csv", "markdown"], default="csv")
    p.add_argument("--output", help="report path (default: stdout)")
    p.add_argument("-v", "--verbose", action="store_true")


def build_cluster_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="pearson-kmeans",
        description="Cluster a UCR-style time-series file with standard and "
        "Pearson k-Means. Use the 'devils-advocate' subcommand for the "
        "synthetic trend/probe experiment.",
    )
    p.add_argument("--data", required=True, help="UCR-style input file")
    p.add_argument("--k", type=_positive, help="cluster count (default: number of classes)")
    p.add_argument("--variant", choices=["protocol", "standard", "pearson"], default="protocol")
    p.add_argument("--normalization", choices=["unitnorm", "zscore"], default="unitnorm",
                   help="zscore (population sigma = 1) is only valid with --variant standard")
    p.add_argument("--drop-constant", action="store_true",
                   help="drop constant rows instead of failing")
    _add_common(p, default_runs=5)
    return p


def build_devils_parser() -> argparse.ArgumentParser:
    d = DevilsAdvocateConfig()
    p = argparse.ArgumentParser(
        prog="pearson-kmeans devils-advocate",
        description="Noisy increasing/decreasing ramps plus V-shaped probes; "
        "reports how each k-Means variant splits the probes.",
    )
    p.add_argument("--n-per-cluster", type=_positive, default=d.n_per_cluster)
    p.add_argument("--n-probes", type=_positive, default=d.n_probes)
    p.add_argument("--sigma-increasing", type=_sigma, default=d.sigma_increasing)
    p.add_argument("--sigma-decreasing", type=_sigma, default=d.sigma_decreasing)
    p.add_argument("--sigma-probe", type=_sigma, default=d.sigma_probe)
    p.add_argument("--probe", choices=sorted(PROBE_TEMPLATES), default=d.probe,
                   help="symmetric: neutral V (default); literal: 16..0,1..15")
    p.add_argument("--init", choices=INIT_MODES, default="templates",
                   help="start from noise-free ramps or from one sampled row per trend")
    _add_common(p, default_runs=50)
    return p


def _cluster(args) -> None:
    convention = NormalizationConvention(args.normalization)
    if args.variant != "standard" and convention is not NormalizationConvention.UNIT_NORM:
        raise ClusteringError(
            f"--normalization {args.normalization} requires --variant standard"
        )
    data = load_ucr(args.data, convention, drop_constant=args.drop_constant)
    if data.dropped_lines:
        logger.warning("dropped constant series on lines %s", list(data.dropped_lines))
    if args.variant == "protocol":
        report = run_protocol(data, args.runs, args.seed, args.k, args.max_iters)
    else:
        report = run_variant(
            data, KMeansVariant(args.variant), args.runs, args.seed, args.k, args.max_iters
        )
    emit_report(report, args.format, args.output)


def _devils(args) -> None:
    config = DevilsAdvocateConfig(
        n_per_cluster=args.n_per_cluster,
        n_probes=args.n_probes,
        sigma_increasing=args.sigma_increasing,
        sigma_decreasing=args.sigma_decreasing,
        sigma_probe=args.sigma_probe,
        seed=args.seed,
        probe=args.probe,
    )
    report = run_devils_advocate(config, args.runs, args.max_iters, args.init)
    emit_report(report, args.format, args.output)


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] == "devils-advocate":
        args, handler = build_devils_parser().parse_args(argv[1:]), _devils
    else:
        args, handler = build_cluster_parser().parse_args(argv), _cluster
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        handler(args)
    except ClusteringError as exc:
        print(json.dumps({"error": exc.code, "message": str(exc)}), file=sys.stderr)
        return 1
    except OSError as exc:
        print(json.dumps({"error": "IOError", "message": str(exc)}), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
