"""Coverage reports: a route table as CSV plus rendered figures.

generate_report builds every witness for orders up to a bound, writes one
delimited row per certificate (order, target, recount, route, parameters),
and renders two PNG figures next to the table: a coverage map of attained
counts by order, and a per-order breakdown of which construction route
produced each certificate.
"""

from __future__ import annotations

import csv
import json
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .spectrum import band, spectrum_C
from .synthesis import witness


def witness_rows(max_n: int, seed: int = 0) -> list:
    """One dict per (order, target) with the route that produced it."""
    rows = []
    for n in range(1, max_n + 1):
        for k in spectrum_C(n).members():
            cert = witness(n, k, seed=seed)
            rows.append(
                {
                    "n": n,
                    "k": k,
                    "recount": cert.k_recounted,
                    "rule": cert.trace["rule"],
                    "params": json.dumps(cert.trace["params"], sort_keys=True),
                }
            )
    return rows


def write_route_table(rows: list, path: str) -> str:
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(
            fh, fieldnames=["n", "k", "recount", "rule", "params"]
        )
        writer.writeheader()
        writer.writerows(rows)
    return path


def coverage_figure(path: str, max_n: int) -> str:
    """Attained counts by order, with the never-attained values marked."""
    fig, ax = plt.subplots(figsize=(8, 5))
    xs, ys = [], []
    gap_xs, gap_ys = [], []
    for n in range(1, max_n + 1):
        attained = spectrum_C(n).values
        for k in attained:
            xs.append(n)
            ys.append(k)
        missing = {n * n - 2, n * n - 4} | (band(n).values - attained)
        for k in missing:
            gap_xs.append(n)
            gap_ys.append(k)
    ax.scatter(xs, ys, s=6, color="tab:blue", label="attainable")
    ax.scatter(gap_xs, gap_ys, s=22, color="tab:red", marker="x", label="never attained")
    ax.set_xlabel("order n")
    ax.set_ylabel("commuting pairs k")
    ax.set_title("Attainable commuting counts by order")
    ax.legend(loc="upper left")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def route_figure(rows: list, path: str) -> str:
    """Stacked bars: how many targets each construction route covered."""
    orders = sorted({row["n"] for row in rows})
    rules = sorted({row["rule"] for row in rows})
    totals = {n: {rule: 0 for rule in rules} for n in orders}
    for row in rows:
        totals[row["n"]][row["rule"]] += 1
    fig, ax = plt.subplots(figsize=(8, 5))
    bottom = [0] * len(orders)
    for rule in rules:
        heights = [totals[n][rule] for n in orders]
        ax.bar(orders, heights, bottom=bottom, label=rule)
        bottom = [b + h for b, h in zip(bottom, heights)]
    ax.set_xlabel("order n")
    ax.set_ylabel("targets covered")
    ax.set_title("Construction route per witnessed target")
    ax.legend(loc="upper left", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def generate_report(out_dir: str, max_n: int = 12, seed: int = 0) -> list:
    """Write the route table and both figures; return the file paths."""
    os.makedirs(out_dir, exist_ok=True)
    rows = witness_rows(max_n, seed=seed)
    written = [
        write_route_table(rows, os.path.join(out_dir, "routes.csv")),
        coverage_figure(os.path.join(out_dir, "coverage.png"), max_n),
        route_figure(rows, os.path.join(out_dir, "routes.png")),
    ]
    return written
