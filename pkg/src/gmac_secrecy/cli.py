"""Command line front end.

Exit codes: 0 on success, 1 when a verification ran but failed, 2 for
usage, parameter or resource problems. Identical invocations write
byte-identical files; nothing here depends on wall-clock state.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import bounds, channels, oracle, regions
from .entropy import binary_entropy, gauss_rate, star

__all__ = ["main", "FIGURE_FILES", "FIG4_TAPS", "FIG5_TAP", "FIG6_PRESET", "FIG6_TAP_NOISES"]

FIG4_TAPS = (0.05, 0.1, 0.25, 0.5)
FIG5_TAP = 0.2
FIG6_PRESET = {"p1": 10.0, "p2": 10.0, "n": 1.0}
# Tap noise variances giving user1-to-user2 SNRs of +5, 0 and -5 dB.
FIG6_TAP_NOISES = (10.0**0.5, 10.0, 10.0**1.5)
FIGURE_FILES = {
    4: tuple(f"fig4_p{p}.csv" for p in FIG4_TAPS),
    5: ("fig5_secrecy.csv", "fig5_timeshare.csv"),
    6: ("fig6_snr_p5db.csv", "fig6_snr_0db.csv", "fig6_snr_m5db.csv", "fig6_mac.csv"),
}

GAUSSIAN_ACHIEVABILITY_PRESETS = (
    (1.0, 1.0, 1.0, 2.0),
    (10.0, 10.0, 1.0, 31.62),
    (1.0, 4.0, 1.0, 4.0),
)


@dataclass(frozen=True)
class RunConfig:
    """Everything a run depends on; no hidden state enters the output."""

    command: str
    model: str | None = None
    fig: int | None = None
    lemma: str | None = None
    params: dict = field(default_factory=dict)
    points: int = regions.DEFAULT_POINTS
    out: str | None = None
    out_dir: str | None = None
    code: str | None = None
    channel: str | None = None


def _emit_curve(curve: regions.RegionCurve, out: str | None) -> None:
    if out is None or out == "-":
        regions.write_curve_csv(curve, sys.stdout)
    else:
        regions.save_curve_csv(curve, out)


def _cmd_region(cfg: RunConfig) -> int:
    if cfg.model == "deterministic":
        curve = regions.deterministic_secrecy_curve(cfg.points)
        print("boundary: R0 + R1 = 1 with Re = R1")
    elif cfg.model == "binary":
        curve = regions.binary_secrecy_curve(cfg.params["p"], cfg.points)
        first, last = curve.points[0], curve.points[-1]
        print(
            f"alpha_star endpoints: {first.alpha_star:.12g} at R0={first.r0:.12g}, "
            f"{last.alpha_star:.12g} at R0={last.r0:.12g}"
        )
    else:
        g = channels.GaussianGmac(
            cfg.params["p1"], cfg.params["p2"], cfg.params["n"], cfg.params["n2"]
        )
        curve = regions.gaussian_secrecy_curve(g, cfg.points)
        flat = gauss_rate(g.p1, g.n) - gauss_rate(g.p1, g.n2)
        print(
            f"knee: R0={regions.gaussian_flat_knee(g):.12g}, flat R1={flat:.12g}"
        )
    _emit_curve(curve, cfg.out)
    return 0


def _figure_curves(fig: int, points: int) -> list[tuple[str, regions.RegionCurve]]:
    if fig == 4:
        return [
            (name, regions.binary_secrecy_curve(p, points))
            for name, p in zip(FIGURE_FILES[4], FIG4_TAPS)
        ]
    if fig == 5:
        return [
            (FIGURE_FILES[5][0], regions.binary_secrecy_curve(FIG5_TAP, points)),
            (FIGURE_FILES[5][1], regions.time_sharing_curve(FIG5_TAP, points)),
        ]
    out = []
    for name, n2 in zip(FIGURE_FILES[6], FIG6_TAP_NOISES):
        g = channels.GaussianGmac(FIG6_PRESET["p1"], FIG6_PRESET["p2"], FIG6_PRESET["n"], n2)
        out.append((name, regions.gaussian_secrecy_curve(g, points)))
    g = channels.GaussianGmac(
        FIG6_PRESET["p1"], FIG6_PRESET["p2"], FIG6_PRESET["n"], FIG6_TAP_NOISES[0]
    )
    out.append((FIGURE_FILES[6][3], regions.gaussian_mac_curve(g, points)))
    return out


def _cmd_figure(cfg: RunConfig) -> int:
    out_dir = Path(cfg.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, curve in _figure_curves(cfg.fig, cfg.points):
        path = out_dir / name
        regions.save_curve_csv(curve, path)
        print(f"wrote {path}")
    return 0


def _verify_convexity(cfg: RunConfig) -> int:
    rhos = [cfg.params["rho"]] if cfg.params.get("rho") is not None else [0.1, 0.2, 0.3, 0.45]
    step = cfg.params.get("grid_step") or 1e-3
    ok = True
    for rho in rhos:
        gap = bounds.star_entropy_convexity_gap(rho, step)
        ok = ok and gap > 0.0
        print(f"rho={rho:g} min_second_difference={gap:.6e}")
    print("PASS: star-entropy composition strictly convex on the grid" if ok
          else "FAIL: strict convexity does not hold on the grid")
    return 0 if ok else 1


def _verify_entropy_power_scan(cfg: RunConfig) -> int:
    n = int(cfg.params.get("n") or 2)
    p0 = cfg.params.get("p0") if cfg.params.get("p0") is not None else 0.2
    v = cfg.params.get("v") if cfg.params.get("v") is not None else 0.5
    step = cfg.params.get("grid_step") or bounds.DEFAULT_EPI_STEP
    report = bounds.binary_epi_scan(n, p0, v, step)
    matches = all(c.matches_equality_condition for c in report.equality_cases)
    print(
        f"n={n} p0={p0:g} v={v:g} feasible={report.feasible_count} "
        f"min_slack={report.min_slack:.6e} equality_cases={len(report.equality_cases)}"
    )
    ok = report.holds and matches
    print("PASS: tap-output entropy bound holds on the grid" if ok
          else "FAIL: bound or equality characterization violated on the grid")
    return 0 if ok else 1


def _verify_achievability_binary(cfg: RunConfig) -> int:
    taps = [cfg.params["p"]] if cfg.params.get("p") is not None else [0.1, 0.2, 0.3]
    worst = 0.0
    for p in taps:
        ch = channels.build_binary_gmac(p)
        hp = binary_entropy(p)
        for k in range(51):
            alpha = k / 100.0
            got = bounds.region_bounds(
                ch, bounds.binary_achievability_distribution(alpha), check_degraded=False
            )
            hpa = binary_entropy(star(p, alpha))
            want = (binary_entropy(alpha), 1.0, binary_entropy(alpha) + hp - hpa, 1.0 + hp - hpa)
            worst = max(worst, max(abs(a - b) for a, b in zip(got, want)))
    print(f"max discrepancy vs closed forms: {worst:.6e}")
    ok = worst <= 1e-10
    print("PASS: binary coded input law reproduces the closed forms" if ok
          else "FAIL: binary achievability bounds deviate from the closed forms")
    return 0 if ok else 1


def _verify_achievability_gaussian(cfg: RunConfig) -> int:
    worst = 0.0
    for p1, p2, n, n2 in GAUSSIAN_ACHIEVABILITY_PRESETS:
        g = channels.GaussianGmac(p1, p2, n, n2)
        for k in range(101):
            alpha = k / 100.0
            got = bounds.gaussian_region_bounds(g, alpha)
            want = bounds.gaussian_region_bounds_closed_form(g, alpha)
            worst = max(worst, max(abs(a - b) for a, b in zip(got, want)))
    print(f"max discrepancy covariance vs closed forms: {worst:.6e}")
    ok = worst <= 1e-9
    print("PASS: covariance path matches the closed forms" if ok
          else "FAIL: covariance path deviates from the closed forms")
    return 0 if ok else 1


def _verify_degraded(cfg: RunConfig) -> int:
    worst = 0.0
    ok = True
    taps = [cfg.params["p"]] if cfg.params.get("p") is not None else [0.0, 0.1, 0.2, 0.3, 0.4, 0.5]
    for p in taps:
        degraded, violation = channels.is_degraded(channels.build_binary_gmac(p))
        worst = max(worst, violation)
        ok = ok and degraded
    det_degraded, det_violation = channels.is_degraded(channels.build_deterministic_example())
    ok = ok and not det_degraded
    gauss_gap = max(
        channels.marginal_match_gap(channels.GaussianGmac(*preset))
        for preset in GAUSSIAN_ACHIEVABILITY_PRESETS
    )
    ok = ok and gauss_gap <= 1e-12
    print(f"binary max violation: {worst:.6e}")
    print(f"deterministic example violation: {det_violation:.6e} (expected non-degraded)")
    print(f"gaussian marginal gap: {gauss_gap:.6e}")
    print("PASS: degradedness checks agree with the models" if ok
          else "FAIL: degradedness checks disagree with the models")
    return 0 if ok else 1


def _verify_grid(cfg: RunConfig) -> int:
    p = cfg.params.get("p") if cfg.params.get("p") is not None else 0.2
    r0s = cfg.params.get("r0") or [0.0, 0.25, 0.5, 0.75]
    step = cfg.params.get("grid_step") or bounds.DEFAULT_SIMPLEX_STEP
    ch = channels.build_binary_gmac(p)
    worst = 0.0
    overshoot = 0.0
    for r0 in r0s:
        got, _ = bounds.max_secrecy_rate_over_grid(ch, r0, grid_step=step)
        want, _ = regions.binary_secrecy_capacity(r0, p)
        worst = max(worst, abs(got - want))
        overshoot = max(overshoot, got - want)
        print(f"R0={r0:g} grid={got:.9f} closed_form={want:.9f}")
    ok = worst <= 1e-3 and overshoot <= 1e-9
    print(f"max gap: {worst:.6e}, overshoot: {overshoot:.6e}")
    print("PASS: grid search reaches the closed-form boundary" if ok
          else "FAIL: grid search misses the closed-form boundary")
    return 0 if ok else 1


_VERIFIERS = {
    "2": _verify_convexity,
    "3": _verify_entropy_power_scan,
    "achievability-binary": _verify_achievability_binary,
    "achievability-gaussian": _verify_achievability_gaussian,
    "degraded": _verify_degraded,
    "grid-vs-closed-form": _verify_grid,
}


def _load_channel(spec: str) -> channels.FiniteGmac:
    if spec == "deterministic":
        return channels.build_deterministic_example()
    if spec.startswith("binary:"):
        key, _, value = spec[len("binary:"):].partition("=")
        if key != "p" or value == "":
            raise ValueError(f"builtin channel spec must look like binary:p=0.2, got {spec!r}")
        return channels.build_binary_gmac(float(value))
    path = Path(spec)
    if not path.is_file():
        raise ValueError(f"channel spec {spec!r} is neither a builtin nor a readable file")
    return channels.FiniteGmac.from_dict(_load_json(path))


def _load_json(path: Path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValueError(f"could not parse {path}: {exc}") from exc


def _load_code(spec: str) -> oracle.Codebook:
    if spec == "corner":
        return oracle.corner_secrecy_code()
    if spec == "corner-common":
        return oracle.corner_common_code()
    path = Path(spec)
    if not path.is_file():
        raise ValueError(f"code spec {spec!r} is neither a builtin nor a readable file")
    return oracle.Codebook.from_dict(_load_json(path))


def _cmd_oracle(cfg: RunConfig) -> int:
    report = oracle.evaluate(_load_code(cfg.code), _load_channel(cfg.channel))
    print(json.dumps(report.to_dict(), sort_keys=True))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gmac-secrecy",
        description="Secrecy rate regions for two-user multiple access channels",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_region = sub.add_parser("region", help="sample a secrecy boundary as CSV")
    p_region.add_argument("model", choices=("deterministic", "binary", "gaussian"))
    p_region.add_argument("--p", type=float, help="tap crossover for the binary model")
    p_region.add_argument("--p1", type=float, help="power of the confidential user")
    p_region.add_argument("--p2", type=float, help="power of the other user")
    p_region.add_argument("--n", type=float, help="destination noise variance")
    p_region.add_argument("--n2", type=float, help="tap noise variance")
    p_region.add_argument("--points", type=int, default=regions.DEFAULT_POINTS)
    p_region.add_argument("--out", help="CSV path, or - for stdout")

    p_fig = sub.add_parser("figure", help="emit the CSV inputs of one figure")
    p_fig.add_argument("fig", type=int, choices=(4, 5, 6))
    p_fig.add_argument("--out-dir", required=True)
    p_fig.add_argument("--points", type=int, default=regions.DEFAULT_POINTS)

    p_verify = sub.add_parser("verify", help="run one numeric verification")
    p_verify.add_argument("--lemma", required=True, choices=tuple(_VERIFIERS))
    p_verify.add_argument("--rho", type=float)
    p_verify.add_argument("--n", dest="epi_n", type=int)
    p_verify.add_argument("--p0", type=float)
    p_verify.add_argument("--v", type=float)
    p_verify.add_argument("--p", type=float)
    p_verify.add_argument("--r0", type=float, action="append")
    p_verify.add_argument("--grid-step", type=float)

    p_oracle = sub.add_parser("oracle", help="exact codebook evaluation")
    oracle_sub = p_oracle.add_subparsers(dest="action", required=True)
    p_eval = oracle_sub.add_parser("evaluate", help="equivocation and error of a code")
    p_eval.add_argument("--code", required=True, help="codebook JSON path, or corner / corner-common")
    p_eval.add_argument(
        "--channel", required=True, help="channel JSON path, or deterministic / binary:p=0.2"
    )
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    if args.command == "region":
        params: dict = {}
        if args.model == "binary":
            if args.p is None:
                raise ValueError("the binary model needs --p")
            params["p"] = args.p
        elif args.model == "gaussian":
            for key in ("p1", "p2", "n", "n2"):
                value = getattr(args, key)
                if value is None:
                    raise ValueError(f"the gaussian model needs --{key}")
                params[key] = value
        return RunConfig(
            command="region", model=args.model, params=params,
            points=args.points, out=args.out,
        )
    if args.command == "figure":
        return RunConfig(
            command="figure", fig=args.fig, points=args.points, out_dir=args.out_dir
        )
    if args.command == "verify":
        params = {
            "rho": args.rho, "n": args.epi_n, "p0": args.p0, "v": args.v,
            "p": args.p, "r0": args.r0, "grid_step": args.grid_step,
        }
        return RunConfig(command="verify", lemma=args.lemma, params=params)
    return RunConfig(command="oracle", code=args.code, channel=args.channel)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config_from_args(args)
        if cfg.command == "region":
            return _cmd_region(cfg)
        if cfg.command == "figure":
            return _cmd_figure(cfg)
        if cfg.command == "verify":
            return _VERIFIERS[cfg.lemma](cfg)
        return _cmd_oracle(cfg)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
