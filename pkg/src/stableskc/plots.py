"""Figures for stability reports."""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402

from .verifier import StabilityReport  # noqa: E402

__all__ = ["plot_report"]


def plot_report(report: StabilityReport, path, title: str | None = None) -> None:
    """Save one heatmap per round of the pair meeting counts.

    A stable round shows a uniform off-diagonal; deviating cells stand out.
    """
    k, n = report.k, report.n
    fig, axes = plt.subplots(1, k, figsize=(2.6 * k + 1, 3.0), squeeze=False)
    vmax = max(int(report.counts.max()), 1)
    off_diag = ~np.eye(n, dtype=bool)
    im = None
    for i, ax in enumerate(axes[0], start=1):
        data = np.ma.masked_array(report.counts[i - 1], mask=~off_diag)
        im = ax.imshow(data, cmap="viridis", vmin=0, vmax=vmax, interpolation="nearest")
        status = f"c = {report.c_values[i]}" if i in report.stable_rounds else "unstable"
        ax.set_title(f"round {i}: {status}", fontsize=9)
        ax.set_xticks([])
        ax.set_yticks([])
    cbar = fig.colorbar(im, ax=axes[0].tolist(), shrink=0.8, label="tournaments")
    cbar.locator = MaxNLocator(integer=True)
    cbar.update_ticks()
    verdict = "stable" if report.stable else "unstable"
    fig.suptitle(title or f"{n} players, {report.num_tournaments} tournaments: {verdict}", fontsize=10)
    fig.savefig(path, dpi=120)
    plt.close(fig)
