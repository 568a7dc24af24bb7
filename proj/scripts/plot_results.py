#!/usr/bin/env python3
# Copyright 2026 The cohsim Authors
# SPDX-License-Identifier: Apache-2.0
"""Plots cohsim CSV outputs.

Reads any mix of CSV files produced by `cohsim sweep`, `cohsim fcs`, and
`cohsim wigner` (the leading `#` metadata lines are skipped, the header row
identifies the kind) and writes one PNG next to each input.

Usage:
    python3 scripts/plot_results.py sweep.csv fcs.csv wigner.csv
"""

import argparse
import csv
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def read_rows(path: Path) -> list[list[str]]:
    with path.open(newline="") as fh:
        return [
            row
            for row in csv.reader(fh)
            if row and not row[0].lstrip().startswith("#")
        ]


def plot_sweep(rows: list[list[str]], out: Path) -> None:
    data = rows[1:]
    k = [int(r[0]) for r in data]
    c2 = [float(r[1]) for r in data]
    sx = [float(r[2]) for r in data]
    prob = [float(r[3]) for r in data]
    mode = data[0][4] if len(data[0]) > 4 else ""

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.6))
    ax1.plot(k, c2, "o-")
    ax1.set_xlabel("coupled qubits k")
    ax1.set_ylabel("c2")
    ax1.set_title(f"staged coupling ({mode})")
    ax1.grid(alpha=0.3)

    ax2.plot(k, sx, "s-", color="tab:orange")
    ax2b = ax2.twinx()
    ax2b.plot(k, prob, "^--", color="tab:green")
    ax2.set_xlabel("coupled qubits k")
    ax2.set_ylabel("<Sx>")
    ax2b.set_ylabel("acceptance probability")
    ax2.set_title("mean spin and acceptance")
    ax2.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    plt.close(fig)


def plot_fcs(rows: list[list[str]], out: Path) -> None:
    data = rows[1:]
    thetas = sorted({float(r[0]) for r in data})
    values = sorted({float(r[1]) for r in data})
    grid = np.zeros((len(values), len(thetas)))
    t_index = {t: i for i, t in enumerate(thetas)}
    v_index = {v: i for i, v in enumerate(values)}
    for r in data:
        grid[v_index[float(r[1])], t_index[float(r[0])]] = float(r[2])

    fig, ax = plt.subplots(figsize=(6, 4))
    mesh = ax.pcolormesh(thetas, values, grid, shading="nearest", cmap="magma")
    fig.colorbar(mesh, ax=ax, label="probability")
    ax.set_xlabel("probe angle theta")
    ax.set_ylabel("S_theta outcome")
    ax.set_title("full counting statistics of S_theta")
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    plt.close(fig)


def plot_wigner(rows: list[list[str]], out: Path) -> None:
    sy = [float(v) for v in rows[0][1:]]
    sx = [float(r[0]) for r in rows[1:]]
    values = np.array([[float(v) for v in r[1:]] for r in rows[1:]])

    fig, ax = plt.subplots(figsize=(5.2, 4.4))
    mesh = ax.pcolormesh(sy, sx, values, shading="nearest", cmap="viridis")
    fig.colorbar(mesh, ax=ax, label="W(sx, sy)")
    ax.set_xlabel("sy")
    ax.set_ylabel("sx")
    ax.set_aspect("equal")
    ax.set_title("planar spin quasi-distribution")
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    plt.close(fig)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("csv_files", nargs="+", type=Path)
    args = parser.parse_args()

    for path in args.csv_files:
        rows = read_rows(path)
        if not rows:
            print(f"{path}: no data rows", file=sys.stderr)
            return 1
        header = [c.strip().lower() for c in rows[0]]
        out = path.with_suffix(".png")
        if header[:2] == ["k", "c2"]:
            plot_sweep(rows, out)
        elif header[:3] == ["theta", "value", "prob"]:
            plot_fcs(rows, out)
        elif header and header[0].startswith("sx"):
            plot_wigner(rows, out)
        else:
            print(f"{path}: unrecognized header {header}", file=sys.stderr)
            return 1
        print(f"{path} -> {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
