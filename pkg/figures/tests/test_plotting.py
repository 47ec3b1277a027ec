import matplotlib.pyplot as plt
import pytest

from gmac_figures.csv_io import read_curve_csv
from gmac_figures.plotting import FIGURE_INPUTS, build_figure, plot_figure


def load(in_dir, fig_num):
    return [read_curve_csv(in_dir / name) for name in FIGURE_INPUTS[fig_num]]


def test_fig4_has_four_labeled_curves(fig4_inputs):
    figure = build_figure(4, load(fig4_inputs, 4))
    try:
        ax = figure.axes[0]
        labels = [line.get_label() for line in ax.lines]
        assert labels == ["p = 0.05", "p = 0.1", "p = 0.25", "p = 0.5"]
        assert ax.get_xlabel().startswith("R0")
        assert ax.get_ylabel().startswith("R1")
    finally:
        plt.close(figure)


def test_fig5_styles_solid_and_dashed(fig5_inputs):
    figure = build_figure(5, load(fig5_inputs, 5))
    try:
        styles = [line.get_linestyle() for line in figure.axes[0].lines]
        assert styles == ["-", "--"]
        labels = [line.get_label() for line in figure.axes[0].lines]
        assert labels == ["secrecy boundary", "time sharing"]
    finally:
        plt.close(figure)


def test_fig6_has_three_boundaries_and_dotted_mac(fig6_inputs):
    figure = build_figure(6, load(fig6_inputs, 6))
    try:
        lines = figure.axes[0].lines
        assert len(lines) == 4
        assert [l.get_linestyle() for l in lines[:3]] == ["-", "-", "-"]
        assert lines[3].get_linestyle() == ":"
        assert [l.get_label() for l in lines[:3]] == [
            "tap SNR +5 dB", "tap SNR +0 dB", "tap SNR -5 dB",
        ]
        assert lines[3].get_label() == "MAC capacity boundary"
    finally:
        plt.close(figure)


@pytest.mark.parametrize("fig_num", [4, 5, 6])
def test_plot_figure_writes_svg(fig_num, fig4_inputs, fig5_inputs, fig6_inputs, tmp_path):
    in_dir = {4: fig4_inputs, 5: fig5_inputs, 6: fig6_inputs}[fig_num]
    out = tmp_path / f"fig{fig_num}.svg"
    assert plot_figure(fig_num, in_dir, out) == out
    body = out.read_text()
    assert body.startswith("<?xml")
    assert "<svg" in body


def test_plot_figure_is_byte_deterministic(fig5_inputs, tmp_path):
    a = plot_figure(5, fig5_inputs, tmp_path / "a.svg")
    b = plot_figure(5, fig5_inputs, tmp_path / "b.svg")
    assert a.read_bytes() == b.read_bytes()


def test_plot_figure_names_missing_file(fig5_inputs, tmp_path):
    (fig5_inputs / "fig5_timeshare.csv").unlink()
    with pytest.raises(FileNotFoundError) as err:
        plot_figure(5, fig5_inputs, tmp_path / "x.svg")
    assert "fig5_timeshare.csv" in str(err.value)


def test_plot_figure_rejects_unknown_number(fig5_inputs, tmp_path):
    with pytest.raises(ValueError):
        plot_figure(7, fig5_inputs, tmp_path / "x.svg")
