"""CSV and markdown rendering of experiment reports.

Every number is printed with four decimals and a ``.`` separator. CSV
reports hold a per-run block; when at least one run completed, a blank
line and a one-row summary block follow.
"""

from __future__ import annotations

import csv
import io
import os
import sys

from .experiment import DevilsAdvocateReport, ProtocolReport, VariantReport
from .kmeans import KMeansVariant

PROTOCOL_COLUMNS = ["dataset", "k", "T", "n", "run_index", "seed", "E_pear", "E_random"]
PROTOCOL_SUMMARY_COLUMNS = [
    "dataset", "k", "T", "n",
    "E_pear_min", "E_pear_max", "E_pear_mean",
    "E_random_min", "E_random_max", "E_random_mean",
    "runs_completed", "runs_failed", "log_base",
]
VARIANT_COLUMNS = [
    "dataset", "variant", "k", "T", "n", "run_index", "seed",
    "objective", "iterations", "converged", "prototype_norms",
]
DEVILS_COLUMNS = [
    "run_index", "seed", "variant", "to_increasing", "to_decreasing",
    "norm_increasing", "norm_decreasing", "iterations", "converged",
]
DEVILS_SUMMARY_COLUMNS = [
    "variant", "runs", "mean_to_increasing", "mean_to_decreasing",
    "mean_norm_increasing", "mean_norm_decreasing",
]


def fmt(x: float) -> str:
    return f"{x:.4f}"


def _norms(values) -> str:
    return ";".join(fmt(v) for v in values)


def _protocol_tables(report: ProtocolReport):
    rows = [
        [report.dataset_name, report.k, report.T, report.n,
         r.run_index, r.seed, fmt(r.e_pear), fmt(r.e_random)]
        for r in report.completed
    ]
    summary = report.summary()
    if summary is None:
        return [(PROTOCOL_COLUMNS, rows)]
    summary_row = [report.dataset_name, report.k, report.T, report.n]
    for key in ("E_pear", "E_random"):
        summary_row += [fmt(v) for v in summary[key]]
    summary_row += [len(report.completed), len(report.failed), report.log_base]
    return [(PROTOCOL_COLUMNS, rows), (PROTOCOL_SUMMARY_COLUMNS, [summary_row])]


def _variant_tables(report: VariantReport):
    rows = []
    for r in report.runs:
        if r.error is not None:
            continue
        rows.append([
            report.dataset_name, report.variant.value, report.k, report.T, report.n,
            r.run_index, r.seed, fmt(r.objective), r.iterations,
            int(r.converged), _norms(r.prototype_norms),
        ])
    return [(VARIANT_COLUMNS, rows)]


def _devils_tables(report: DevilsAdvocateReport):
    rows = [
        [r.run_index, r.seed, r.variant.value, r.to_increasing, r.to_decreasing,
         fmt(r.norm_increasing), fmt(r.norm_decreasing), r.iterations, int(r.converged)]
        for r in report.runs
    ]
    summary = []
    for variant in (KMeansVariant.STANDARD, KMeansVariant.PEARSON):
        runs = report.for_variant(variant)
        if not runs:
            continue
        inc, dec = report.mean_split(variant)
        summary.append([
            variant.value, len(runs), fmt(inc), fmt(dec),
            fmt(sum(r.norm_increasing for r in runs) / len(runs)),
            fmt(sum(r.norm_decreasing for r in runs) / len(runs)),
        ])
    tables = [(DEVILS_COLUMNS, rows)]
    if summary:
        tables.append((DEVILS_SUMMARY_COLUMNS, summary))
    return tables


def _tables(report):
    if isinstance(report, ProtocolReport):
        return _protocol_tables(report)
    if isinstance(report, VariantReport):
        return _variant_tables(report)
    if isinstance(report, DevilsAdvocateReport):
        return _devils_tables(report)
    raise TypeError(f"no renderer for {type(report).__name__}")


def render_csv(report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for i, (header, rows) in enumerate(_tables(report)):
        if i:
            buf.write("\n")
        writer.writerow(header)
        writer.writerows(rows)
    return buf.getvalue()


def _md_table(header, rows) -> list[str]:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(str(v) for v in row) + " |" for row in rows]
    return lines


def render_markdown(report) -> str:
    tables = _tables(report)
    lines = []
    if isinstance(report, ProtocolReport):
        lines += [
            f"# Protocol: {report.dataset_name}",
            "",
            f"k={report.k}, T={report.T}, n={report.n}; "
            f"entropies in bits (log base {report.log_base}).",
            "",
        ]
    elif isinstance(report, VariantReport):
        lines += [f"# {report.variant.value} k-Means: {report.dataset_name}", ""]
    else:
        c = report.config
        lines += [
            "# Trend/probe experiment",
            "",
            f"{c.n_per_cluster} series per trend, {c.n_probes} probes ({c.probe}), "
            f"initialized from {report.init}; "
            f"noise sigma increasing={c.sigma_increasing:g}, "
            f"decreasing={c.sigma_decreasing:g}, probe={c.sigma_probe:g}.",
            "",
        ]
    for i, (header, rows) in enumerate(tables):
        if i:
            lines += ["", "## Summary", ""]
        lines += _md_table(header, rows)
    if isinstance(report, ProtocolReport):
        done = report.completed
        if done:
            lines += ["", "## Standard-variant prototype norms", ""]
            lines += _md_table(
                ["run_index", "norms"], [[r.run_index, _norms(r.standard_norms)] for r in done]
            )
        if report.failed:
            lines += ["", "## Failed runs", ""]
            lines += [f"- run {r.run_index} (seed {r.seed}): {r.error}" for r in report.failed]
    return "\n".join(lines) + "\n"


def emit_report(report, fmt_name: str = "csv", destination: str | os.PathLike | None = None) -> str:
    """Render ``report`` and write it to ``destination`` (stdout if None).

    Returns the rendered text.
    """
    if fmt_name == "csv":
        text = render_csv(report)
    elif fmt_name == "markdown":
        text = render_markdown(report)
    else:
        raise ValueError(f"unknown report format {fmt_name!r}")
    if destination is None:
        sys.stdout.write(text)
        return text
    try:
        with open(destination, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write report to {os.fspath(destination)}: {exc}") from exc
    return text


def read_csv_blocks(text: str) -> list[list[dict[str, str]]]:
    """Parse a CSV report back into its blocks of row dicts."""
    blocks = []
    for chunk in text.split("\n\n"):
        if chunk.strip():
            blocks.append(list(csv.DictReader(io.StringIO(chunk))))
    return blocks
