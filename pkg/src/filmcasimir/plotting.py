"""Figure rendering for sweep and comparison reports.

Uses the Agg backend so reports render in headless environments.  All
panels plot log10 magnitudes on a linear axis: that representation
survives the deep-suppression regime where the linear values underflow
and only log magnitudes exist.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


@dataclass
class SweepSeries:
    """One curve per panel: log10 |F| and log10 |P| against the sweep axis."""

    label: str
    style: str
    x: list = field(default_factory=list)
    log10_f: list = field(default_factory=list)
    log10_p: list = field(default_factory=list)

    def add(self, x: float, log10_f: Optional[float], log10_p: Optional[float]) -> None:
        if log10_f is None or log10_p is None:
            return
        self.x.append(x)
        self.log10_f.append(log10_f)
        self.log10_p.append(log10_p)


def render_sweep(path: str, series: Sequence[SweepSeries], x_label: str,
                 log_x: bool, title: str) -> None:
    fig, (ax_f, ax_p) = plt.subplots(1, 2, figsize=(9.6, 4.2))
    for s in series:
        if not s.x:
            continue
        ax_f.plot(s.x, s.log10_f, s.style, label=s.label)
        ax_p.plot(s.x, s.log10_p, s.style, label=s.label)
    for ax, ylab in ((ax_f, "log10 |F| (J/m^2)"), (ax_p, "log10 |P| (Pa)")):
        if log_x:
            ax.set_xscale("log")
        ax.set_xlabel(x_label)
        ax.set_ylabel(ylab)
        ax.grid(True, which="both", alpha=0.3)
        if any(s.x for s in series):
            ax.legend()
    fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_compare(path: str, items: Sequence[tuple], title: str) -> None:
    """Grouped bars of log10 magnitudes: (label, log10_l0, log10_tail)."""
    fig, ax = plt.subplots(figsize=(6.0, 4.2))
    width = 0.35
    for i, (label, l0, tail) in enumerate(items):
        if l0 is not None:
            ax.bar(i - width / 2, l0, width, color="tab:blue",
                   label="l = 0" if i == 0 else None)
        if tail is not None:
            ax.bar(i + width / 2, tail, width, color="tab:orange",
                   label="l >= 1" if i == 0 else None)
    ax.set_xticks(range(len(items)))
    ax.set_xticklabels([label for label, _, _ in items])
    ax.set_ylabel("log10 |F contribution| (J/m^2)")
    ax.grid(True, axis="y", alpha=0.3)
    ax.legend()
    fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
