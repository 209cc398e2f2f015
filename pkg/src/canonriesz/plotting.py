"""Matplotlib figures written next to the CLI's delimited outputs."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def _fmt_sharpness(values) -> str:
    return ", ".join("undef" if v is None else f"{v:g}" for v in values)


def _show(ax, img, title, cmap="gray"):
    im = ax.imshow(img, cmap=cmap, interpolation="nearest")
    ax.set_title(title, fontsize=9)
    ax.set_xticks([])
    ax.set_yticks([])
    return im


def save_components(components: dict, path, title=None) -> None:
    """One panel per named real array, e.g. amplitude/real/imag."""
    fig, axes = plt.subplots(1, len(components), figsize=(3.2 * len(components), 3.4), squeeze=False)
    for ax, (name, arr) in zip(axes[0], components.items()):
        im = _show(ax, arr, name, cmap="viridis")
        fig.colorbar(im, ax=ax, fraction=0.046, pad=0.04)
    if title:
        fig.suptitle(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def save_sweep(source: np.ndarray, entries, path) -> None:
    """Source image followed by every edge map of a sweep."""
    n = len(entries) + 1
    cols = min(n, 3)
    rows = int(np.ceil(n / cols))
    fig, axes = plt.subplots(rows, cols, figsize=(3.2 * cols, 3.4 * rows), squeeze=False)
    flat = axes.ravel()
    _show(flat[0], source, "source")
    for ax, entry in zip(flat[1:], entries):
        label = "sharpness " + _fmt_sharpness(entry.edge.sharpness)
        mses = ", ".join(f"{r.global_mse:.4f}" for r in entry.reports)
        _show(ax, entry.edge.values, f"{label}\nMSE {mses}")
    for ax in flat[n:]:
        ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def save_subregion_grid(grid: np.ndarray, path, title="sub-region MSE") -> None:
    fig, ax = plt.subplots(figsize=(3.6, 3.2))
    im = ax.imshow(grid, cmap="magma")
    for (i, j), v in np.ndenumerate(grid):
        ax.text(j, i, f"{v:.4f}", ha="center", va="center", fontsize=8,
                color="white" if v < grid.max() * 0.6 else "black")
    ax.set_xticks(range(3))
    ax.set_yticks(range(3))
    ax.set_title(title, fontsize=9)
    fig.colorbar(im, ax=ax, fraction=0.046, pad=0.04)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def save_convergence(curve, path) -> None:
    eps = np.array(curve.epsilons, dtype=float)
    dist = np.array(curve.distances, dtype=float)
    fig, ax = plt.subplots(figsize=(4.5, 3.4))
    ax.loglog(eps, dist, "o-")
    ax.set_xlabel("epsilon")
    ax.set_ylabel("relative L2 distance to classical Riesz")
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def save_bench(rows, path) -> None:
    n = [r[0] for r in rows]
    fig, ax = plt.subplots(figsize=(4.5, 3.4))
    ax.loglog(n, [r[1] for r in rows], "o-", label="multiplier (FFT)")
    ax.loglog(n, [r[2] for r in rows], "s-", label="kernel-sum oracle")
    ax.set_xlabel("n")
    ax.set_ylabel("time per transform [ms]")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
