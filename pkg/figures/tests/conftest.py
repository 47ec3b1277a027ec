import json

import pytest

HEADER = "model,param_json,R0,R1,alpha_star\n"


def format_params(params):
    return json.dumps(params, sort_keys=True, separators=(",", ":"))


def write_curve(path, model, params, rows):
    """Write a minimal curve CSV in the producer's format."""
    blob = format_params(params).replace('"', '""')
    lines = [HEADER]
    for r0, r1, alpha in rows:
        lines.append(f'{model},"{blob}",{r0:.12g},{r1:.12g},{alpha:.12g}\n')
    path.write_text("".join(lines))
    return path


@pytest.fixture
def fig4_inputs(tmp_path):
    for p in (0.05, 0.1, 0.25, 0.5):
        rows = [(0.0, 1.0 - p, 0.5), (0.5, 0.4 - 0.2 * p, 0.3), (1.0, 0.0, 0.0)]
        write_curve(tmp_path / f"fig4_p{p}.csv", "binary", {"p": p}, rows)
    return tmp_path


@pytest.fixture
def fig5_inputs(tmp_path):
    write_curve(
        tmp_path / "fig5_secrecy.csv", "binary", {"p": 0.2},
        [(0.0, 0.72, 0.5), (0.5, 0.39, 0.11), (1.0, 0.0, 0.0)],
    )
    write_curve(
        tmp_path / "fig5_timeshare.csv", "binary-timeshare", {"p": 0.2},
        [(0.0, 0.72, 0.0), (0.5, 0.36, 0.5), (1.0, 0.0, 1.0)],
    )
    return tmp_path


@pytest.fixture
def fig6_inputs(tmp_path):
    presets = [
        ("fig6_snr_p5db.csv", "gaussian", 3.1622776601683795),
        ("fig6_snr_0db.csv", "gaussian", 10.0),
        ("fig6_snr_m5db.csv", "gaussian", 31.622776601683793),
        ("fig6_mac.csv", "gaussian-mac", 3.1622776601683795),
    ]
    for name, model, n2 in presets:
        params = {"n": 1.0, "n2": n2, "p1": 10.0, "p2": 10.0}
        rows = [(0.0, 1.5, 1.0), (1.0, 1.0, 0.7), (2.68, 0.0, 0.0)]
        write_curve(tmp_path / name, model, params, rows)
    return tmp_path
