"""Figure assembly from curve CSV files.

Each figure is rebuilt purely from the CSVs; nothing is recomputed. The
SVG output is deterministic: a fixed hash salt for element ids and no
embedded creation date.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .csv_io import CurveFile, read_curve_csv

# Input file names per figure, matching what `gmac-secrecy figure N` emits.
FIGURE_INPUTS = {
    4: ("fig4_p0.05.csv", "fig4_p0.1.csv", "fig4_p0.25.csv", "fig4_p0.5.csv"),
    5: ("fig5_secrecy.csv", "fig5_timeshare.csv"),
    6: ("fig6_snr_p5db.csv", "fig6_snr_0db.csv", "fig6_snr_m5db.csv", "fig6_mac.csv"),
}

_SVG_HASH_SALT = "gmac-figures"


def _fig4_label(curve: CurveFile) -> str:
    return f"p = {curve.params['p']:g}"


def _fig6_label(curve: CurveFile) -> str:
    if curve.model == "gaussian-mac":
        return "MAC capacity boundary"
    import math

    snr_db = 10.0 * math.log10(curve.params["p1"] / curve.params["n2"])
    return f"tap SNR {snr_db:+.0f} dB"


def build_figure(fig_num: int, curves: list[CurveFile]) -> plt.Figure:
    """Assemble the matplotlib figure for one figure number.

    Axes are R0 horizontally and R1 vertically in all three figures.
    """
    figure, ax = plt.subplots(figsize=(6.0, 4.5))
    if fig_num == 4:
        for curve in curves:
            ax.plot(curve.r0, curve.r1, "-", label=_fig4_label(curve))
        ax.set_title("Binary channel secrecy boundaries")
    elif fig_num == 5:
        secrecy, shared = curves
        ax.plot(secrecy.r0, secrecy.r1, "-", label="secrecy boundary")
        ax.plot(shared.r0, shared.r1, "--", label="time sharing")
        ax.set_title("Secrecy boundary vs time sharing, p = 0.2")
    else:
        for curve in curves:
            if curve.model == "gaussian-mac":
                ax.plot(curve.r0, curve.r1, ":", label=_fig6_label(curve))
            else:
                ax.plot(curve.r0, curve.r1, "-", label=_fig6_label(curve))
        ax.set_title("Gaussian secrecy boundaries vs MAC capacity")
    ax.set_xlabel("R0 (bits per use)")
    ax.set_ylabel("R1 (bits per use)")
    ax.set_xlim(left=0.0)
    ax.set_ylim(bottom=0.0)
    ax.grid(True, alpha=0.3)
    ax.legend()
    figure.tight_layout()
    return figure


def plot_figure(fig_num: int, in_dir: str | Path, out_path: str | Path) -> Path:
    """Read the CSVs of one figure from in_dir and write an SVG to out_path.

    Raises FileNotFoundError naming the first missing CSV, or
    CsvFormatError when a file does not follow the curve contract.
    """
    if fig_num not in FIGURE_INPUTS:
        raise ValueError(f"figure must be one of {sorted(FIGURE_INPUTS)}, got {fig_num}")
    in_dir = Path(in_dir)
    curves = [read_curve_csv(in_dir / name) for name in FIGURE_INPUTS[fig_num]]
    out_path = Path(out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    with plt.rc_context({"svg.hashsalt": _SVG_HASH_SALT}):
        figure = build_figure(fig_num, curves)
        try:
            figure.savefig(out_path, format="svg", metadata={"Date": None})
        finally:
            plt.close(figure)
    return out_path
