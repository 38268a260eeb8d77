"""Figures for the bound reports.  Rendered off-screen straight to files."""

from __future__ import annotations

from matplotlib.figure import Figure

from .bounds import BoundReport, StressReport, theorem_bound
from .matrix import TuckerKind

STYLE = {
    TuckerKind.I: dict(marker="o", color="tab:blue"),
    TuckerKind.II: dict(marker="s", color="tab:green"),
    TuckerKind.III: dict(marker="^", color="tab:red"),
    TuckerKind.IV: dict(marker="D", color="tab:purple"),
    TuckerKind.V: dict(marker="*", color="tab:orange"),
}

# horizontal dodge so families with equal lengths stay visible
OFFSET = {TuckerKind.I: -0.18, TuckerKind.II: 0.0, TuckerKind.III: 0.18,
          TuckerKind.IV: -0.1, TuckerKind.V: 0.1}

# PNG metadata otherwise embeds the matplotlib version
_METADATA = {"Software": None}


def _new_figure(width=6.0, height=4.0):
    fig = Figure(figsize=(width, height), dpi=100)
    ax = fig.add_subplot(1, 1, 1)
    ax.grid(True, alpha=0.3)
    return fig, ax


def plot_bound_table(report: BoundReport, path) -> None:
    """Shortest odd cycle per pattern against the worst-case bound, by column count."""
    fig, ax = _new_figure()
    n_cols = sorted({r.n_cols for r in report.rows})
    ax.step(n_cols, [theorem_bound(n) for n in n_cols], where="mid", color="black",
            linewidth=1.2, label="bound")
    for kind in TuckerKind:
        rows = [r for r in report.rows if r.kind is kind and r.computed is not None]
        if not rows:
            continue
        ax.plot([r.n_cols + OFFSET[kind] for r in rows], [r.computed for r in rows], linestyle="none",
                markersize=7, alpha=0.8, label=f"T_{kind.value}", **STYLE[kind])
    ax.set_xlabel("columns k")
    ax.set_ylabel("shortest odd cycle")
    ax.set_xticks(n_cols)
    ax.legend(loc="upper left", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, metadata=_METADATA)


def plot_stress(report: StressReport, path) -> None:
    fig, ax = _new_figure()
    lengths = sorted(report.lengths)
    ax.bar(lengths, [report.lengths[L] for L in lengths], width=1.2, color="tab:blue")
    ax.axvline(report.bound, color="tab:red", linestyle="--", label=f"bound {report.bound}")
    ax.set_xlabel("shortest odd cycle")
    ax.set_ylabel("matrices")
    ax.set_title(f"{report.non_c1p} non-C1P of {report.trials} ({report.m}x{report.n}, p={report.density})",
                 fontsize=9)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, metadata=_METADATA)
