"""Report rendering: delimited summaries plus matplotlib figures written
side by side, for the orbit poset, the dimension ladder, and the corpus."""

from __future__ import annotations

import csv
import os
from typing import Optional

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .corpus import load_corpus, run_entry
from .orbits import (
    SymplecticPartition,
    gk_dimension,
    orbit_dimension,
    orbit_poset,
)

__all__ = ["report_poset", "report_gk", "report_corpus"]

_FIG_KW = dict(dpi=150, bbox_inches="tight")


def _new_axes(width=7.0, height=5.0):
    fig, ax = plt.subplots(figsize=(width, height))
    ax.grid(True, alpha=0.25, linewidth=0.5)
    return fig, ax


def report_poset(two_r: int, outdir: str, cache_dir: Optional[str] = None) -> list[str]:
    """Orbit poset of sp_{two_r}: a CSV of the nodes and a Hasse diagram."""
    os.makedirs(outdir, exist_ok=True)
    poset = orbit_poset(two_r, cache_dir)
    csv_path = os.path.join(outdir, f"poset_{two_r}.csv")
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["index", "partition", "orbit_dim", "gk_dim"])
        for i, node in enumerate(poset.nodes):
            writer.writerow([i, str(node), orbit_dimension(node), gk_dimension(node)])

    # layer nodes by longest chain from the top (dominance-maximal) orbit
    n = len(poset.nodes)
    children = {i: [] for i in range(n)}
    parents = {i: [] for i in range(n)}
    for i, j in poset.covers:
        children[i].append(j)
        parents[j].append(i)
    depth = {}

    def depth_of(i: int) -> int:
        if i not in depth:
            ups = parents[i]
            depth[i] = 0 if not ups else 1 + max(depth_of(u) for u in ups)
        return depth[i]

    for i in range(n):
        depth_of(i)
    layers: dict[int, list[int]] = {}
    for i, d in depth.items():
        layers.setdefault(d, []).append(i)
    pos = {}
    for d, members in layers.items():
        members.sort()
        for k, i in enumerate(members):
            pos[i] = (k - (len(members) - 1) / 2.0, -d)

    fig, ax = _new_axes(max(6.0, 1.4 * max(len(m) for m in layers.values())), 1.2 * len(layers) + 1)
    for i, j in poset.covers:
        (x0, y0), (x1, y1) = pos[i], pos[j]
        ax.plot([x0, x1], [y0, y1], color="#778899", linewidth=1.0, zorder=1)
    for i, (x, y) in pos.items():
        ax.scatter([x], [y], s=40, color="#2f4f4f", zorder=2)
        ax.annotate(
            str(poset.nodes[i]),
            (x, y),
            textcoords="offset points",
            xytext=(0, 7),
            ha="center",
            fontsize=8,
        )
    ax.set_title(f"Nilpotent orbit poset, sp_{two_r} (dominance covers)")
    ax.set_xticks([])
    ax.set_yticks([])
    ax.grid(False)
    png_path = os.path.join(outdir, f"poset_{two_r}.png")
    fig.savefig(png_path, **_FIG_KW)
    plt.close(fig)
    return [csv_path, png_path]


def report_gk(max_r: int, outdir: str) -> list[str]:
    """Dimension ladder: kernel orbits (2^r) against the regular orbits (2m)."""
    os.makedirs(outdir, exist_ok=True)
    rows = []
    for r in range(1, max_r + 1):
        kernel = gk_dimension(SymplecticPartition((2,) * r))
        regular = gk_dimension(SymplecticPartition((2 * r,)))
        rows.append((r, kernel, regular))
    csv_path = os.path.join(outdir, "gk_dimensions.csv")
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["r", "gk_kernel_orbit", "gk_regular_orbit"])
        writer.writerows(rows)
    fig, ax = _new_axes()
    rs = [row[0] for row in rows]
    ax.plot(rs, [row[1] for row in rows], "o-", label="kernel orbit (2^r): r(r+1)/2")
    ax.plot(rs, [row[2] for row in rows], "s--", label="regular orbit (2r): r^2")
    ax.set_xlabel("rank r")
    ax.set_ylabel("Gelfand-Kirillov dimension")
    ax.set_title("Dimension growth of the kernel and regular orbits")
    ax.legend()
    png_path = os.path.join(outdir, "gk_dimensions.png")
    fig.savefig(png_path, **_FIG_KW)
    plt.close(fig)
    return [csv_path, png_path]


def report_corpus(outdir: str) -> list[str]:
    """Corpus replay results as a CSV plus a per-family pass chart."""
    os.makedirs(outdir, exist_ok=True)
    entries = load_corpus()
    results = []
    for entry in entries:
        report = run_entry(entry)
        detail = report.conditions if hasattr(report, "conditions") else report.properties
        results.append((entry, report.passed, detail))
    csv_path = os.path.join(outdir, "corpus_results.csv")
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["name", "rank", "kind", "passed", "detail"])
        for entry, passed, detail in results:
            writer.writerow(
                [
                    entry.name,
                    entry.rank,
                    entry.kind,
                    "pass" if passed else "fail",
                    ";".join(f"{k}={'T' if v else 'F'}" for k, v in detail),
                ]
            )
    families: dict[str, list[bool]] = {}
    for entry, passed, _ in results:
        fam = entry.name.split("-")[0]
        families.setdefault(fam, []).append(passed)
    fig, ax = _new_axes(6.0, 4.0)
    names = sorted(families)
    totals = [len(families[f]) for f in names]
    passes = [sum(families[f]) for f in names]
    ax.bar(names, totals, color="#d3d3d3", label="entries")
    ax.bar(names, passes, color="#2e8b57", label="passing")
    ax.set_ylabel("corpus entries")
    ax.set_title("Exchange corpus replay by family")
    ax.legend()
    png_path = os.path.join(outdir, "corpus_results.png")
    fig.savefig(png_path, **_FIG_KW)
    plt.close(fig)
    return [csv_path, png_path]
