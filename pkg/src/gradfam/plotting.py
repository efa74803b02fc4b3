"""Figures for the CLI reports, rendered straight to image files."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from gradfam.asymptotics import GrowthReport, MultiplicityEstimate, VolumeReport  # noqa: E402

# strip timestamps/versions so identical data gives identical files
_METADATA = {
    ".png": {"Software": None},
    ".pdf": {"Creator": None, "Producer": None, "CreationDate": None},
    ".svg": {"Date": None, "Creator": None},
}

STYLE = {
    "font.size": 10,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "lines.linewidth": 1.2,
    "svg.hashsalt": "gradfam",
}


def _save(fig, path):
    path = str(path)
    suffix = path[path.rfind("."):].lower() if "." in path else ".png"
    fig.savefig(path, metadata=_METADATA.get(suffix), bbox_inches="tight")
    plt.close(fig)


def plot_growth(report: GrowthReport, path) -> None:
    with plt.rc_context(STYLE):
        fig, (top, bottom) = plt.subplots(2, 1, figsize=(6.5, 5.5), sharex=True)
        ns = list(range(report.window + 1))
        top.step(ns, report.lengths[: report.window + 1], where="post", color="k")
        top.set_ylabel(r"$\ell(R/I_n)$")
        xs = sorted(report.ratios)
        ys = [float(report.ratios[n]) for n in xs]
        label = r"$\Delta(n)\cdot n$" if report.d == 0 else rf"$\Delta(n)/n^{{{report.d - 1}}}$"
        bottom.plot(xs, ys, "o-", ms=2.5, color="C0", label=label)
        bottom.axhline(float(report.gamma_window), color="C3", ls="--", lw=0.8, label="window max")
        bottom.set_xlabel("n")
        bottom.set_ylabel("growth ratio")
        bottom.legend(loc="best", frameon=False)
        _save(fig, path)


def plot_volume(report: VolumeReport, path, reference: float | None = None) -> None:
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(6.5, 4))
        ax.plot([n for n, _ in report.samples], [float(v) for _, v in report.samples], "-", color="k",
                label=r"$\ell(R/I_n)\,d!/n^d$")
        if report.multiplicity_samples:
            ax.plot([s for s, _ in report.multiplicity_samples],
                    [float(v) for _, v in report.multiplicity_samples], "s", ms=3, color="C1",
                    label=r"$e(I_s)/s^d$")
        if reference is not None:
            ax.axhline(reference, color="C3", ls="--", lw=0.8, label="reference")
        ax.set_xlabel("n")
        ax.set_ylabel("normalised length")
        ax.legend(loc="best", frameon=False)
        _save(fig, path)


def plot_multiplicity(estimate: MultiplicityEstimate, path) -> None:
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(6.5, 4))
        ax.plot([s for s, _ in estimate.samples], [float(v) for _, v in estimate.samples], ".-", color="k")
        ax.set_xlabel("s")
        ax.set_ylabel(r"$\ell(A/q^s)\,d!/s^d$")
        _save(fig, path)
