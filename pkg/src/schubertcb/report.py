"""Sweep report artifacts: delimited per-tuple data plus a rendered figure."""

from __future__ import annotations

import csv
import os
from collections import Counter

from .moduli import format_fcurve
from .partitions import format_partition_list
from .verify import SweepReport


def _basename(report: SweepReport) -> str:
    return f"sweep_r{report.box.rows}_l{report.box.cols}_n{report.n}"


def write_sweep_csv(report: SweepReport, outdir: str) -> str:
    path = os.path.join(outdir, _basename(report) + ".csv")
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["lams", "fcurve", "gw_degree", "cb_degree", "match"])
        for lams, fc, gw, cb in report.rows:
            writer.writerow([format_partition_list(lams),
                             format_fcurve(fc) if fc is not None else "",
                             gw, cb, "yes" if gw == cb else "NO"])
    return path


def write_sweep_figure(report: SweepReport, outdir: str) -> str:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    gws = [gw for _, _, gw, _ in report.rows]
    cbs = [cb for _, _, _, cb in report.rows]
    counts = Counter(gws)
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.6))
    xs = sorted(counts)
    ax1.bar(xs, [counts[x] for x in xs], color="#4878d0")
    ax1.set_xlabel("divisor degree")
    ax1.set_ylabel("tuples")
    ax1.set_title(f"degree distribution, {report.box.rows}x{report.box.cols} box")
    ax2.scatter(gws, cbs, s=12, color="#d65f5f")
    top = max(gws + cbs + [1])
    ax2.plot([0, top], [0, top], lw=0.8, color="gray")
    ax2.set_xlabel("GW degree")
    ax2.set_ylabel("CB degree")
    ax2.set_title(f"{len(report.rows)} comparisons, "
                  f"{len(report.mismatches)} mismatches")
    fig.tight_layout()
    path = os.path.join(outdir, _basename(report) + ".png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def write_sweep_artifacts(report: SweepReport, outdir: str) -> tuple[str, str]:
    """Write the delimited table and the figure; returns both paths."""
    if not report.rows:
        raise ValueError("report carries no per-tuple rows; rerun with collection on")
    os.makedirs(outdir, exist_ok=True)
    return write_sweep_csv(report, outdir), write_sweep_figure(report, outdir)
