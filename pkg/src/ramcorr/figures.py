"""Figure rendering for the experiment reports.

Uses the non-interactive backend and strips the writer tag from the
PNG so that a rerun with the same configuration produces the same
bytes.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .correlation import HLReport, TrendPoint  # noqa: E402

_SAVE = {"dpi": 120, "metadata": {"Software": None}}


def save_delta_trend(points: list[TrendPoint], path: str) -> None:
    ns = [p.N for p in points]
    ys = [float(p.delta) if not hasattr(p.delta, "evaluate")
          else p.delta.evaluate() for p in points]
    ratio = [p.delta_over_N for p in points]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.6))
    h = points[0].h if points else 0
    ax1.plot(ns, ys, "o-")
    ax1.axhline(0.0, lw=0.8, color="0.6")
    ax1.set_xlabel("N")
    ax1.set_ylabel(f"deviation at shift {h}")
    ax2.plot(ns, ratio, "s-", color="tab:red")
    ax2.axhline(0.0, lw=0.8, color="0.6")
    ax2.set_xlabel("N")
    ax2.set_ylabel("deviation / N")
    fig.tight_layout()
    fig.savefig(path, **_SAVE)
    plt.close(fig)


def save_delange(values: list[float], path: str, n_corr: int = 0) -> None:
    ms = list(range(1, len(values) + 1))
    fig, ax = plt.subplots(figsize=(6, 3.6))
    ax.step(ms, values, where="post")
    ax.set_xlabel("M")
    label = "majorant partial sum"
    if n_corr:
        label += f" (N = {n_corr})"
    ax.set_ylabel(label)
    fig.tight_layout()
    fig.savefig(path, **_SAVE)
    plt.close(fig)


def save_hl(rep: HLReport, path: str) -> None:
    names = ["corr / N", f"series (Q={rep.Q})", "Euler product"]
    vals = [rep.corr_over_N, rep.singular_truncated, rep.singular_euler]
    fig, ax = plt.subplots(figsize=(6, 3.6))
    bars = ax.bar(names, vals, color=["tab:blue", "tab:orange", "tab:green"])
    for b, v in zip(bars, vals):
        ax.annotate(f"{v:.4f}", (b.get_x() + b.get_width() / 2, v),
                    ha="center", va="bottom", fontsize=9)
    ax.set_ylabel(f"density at shift {rep.h} (N = {rep.N})")
    fig.tight_layout()
    fig.savefig(path, **_SAVE)
    plt.close(fig)
