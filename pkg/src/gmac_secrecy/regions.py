"""Secrecy rate regions and their boundary curves.

A rate triple (R0, R1, Re) collects the common rate, the confidential
rate, and the equivocation rate. Membership tests sweep the single scalar
that parameterizes each region family and refine the best candidate by
golden-section search; boundary solvers invert the closed forms directly.
"""

from __future__ import annotations

import csv
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

import numpy as np

from .channels import GaussianGmac
from .entropy import binary_entropy, binary_entropy_inv, gauss_rate, star

__all__ = [
    "RateTriple",
    "CurvePoint",
    "RegionCurve",
    "deterministic_region_member",
    "binary_region_member",
    "binary_secrecy_capacity",
    "gaussian_region_member",
    "gaussian_secrecy_capacity",
    "gaussian_mac_capacity",
    "gaussian_flat_knee",
    "max_gaussian_sum_rate",
    "deterministic_secrecy_curve",
    "binary_secrecy_curve",
    "gaussian_secrecy_curve",
    "gaussian_mac_curve",
    "time_sharing_curve",
    "sweep_secrecy_curve",
    "write_curve_csv",
    "save_curve_csv",
    "CSV_HEADER",
]

BOUNDARY_TOL = 1e-9
EXACT_TOL = 1e-12
ALPHA_STEP = 1e-4
BISECT_WIDTH = 1e-13
BISECT_MAX_ITER = 200
DEFAULT_POINTS = 201
THREADS_ENV_VAR = "GMAC_SECRECY_THREADS"
CSV_HEADER = ("model", "param_json", "R0", "R1", "alpha_star")

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


class RateTriple(NamedTuple):
    r0: float
    r1: float
    re: float


def _check_tap(p: float) -> None:
    if not 0.0 <= p <= 0.5:
        raise ValueError(f"tap crossover p must lie in [0, 1/2], got {p}")


def _h_arr(a: np.ndarray) -> np.ndarray:
    out = np.zeros_like(a)
    inner = (a > 0.0) & (a < 1.0)
    v = a[inner]
    out[inner] = -v * np.log2(v) - (1.0 - v) * np.log2(1.0 - v)
    return out


def _golden_max(f: Callable[[float], float], lo: float, hi: float, iters: int = 90) -> float:
    """Max of a quasi-concave scalar function on [lo, hi]."""
    a, b = lo, hi
    x1 = b - _GOLDEN * (b - a)
    x2 = a + _GOLDEN * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(iters):
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + _GOLDEN * (b - a)
            f2 = f(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - _GOLDEN * (b - a)
            f1 = f(x1)
    return max(f(0.5 * (a + b)), f1, f2, f(lo), f(hi))


def deterministic_region_member(t: RateTriple, tol: float = EXACT_TOL) -> bool:
    """Membership in {R0 + R1 <= 1, Re = R1} for the noiseless multiplier
    example, where every achievable pair carries full equivocation."""
    r0, r1, re = t
    if min(r0, r1, re) < -tol:
        return False
    return r0 + r1 <= 1.0 + tol and abs(re - r1) <= tol


def binary_region_member(t: RateTriple, p: float, tol: float = BOUNDARY_TOL) -> bool:
    """Membership in the binary capacity-equivocation region at tap crossover p.

    A triple belongs iff some alpha in [0, 1/2] satisfies
        R1 <= h(alpha),            R0 + R1 <= 1,
        Re <= h(alpha) + h(p) - h(p*alpha),
        R0 + Re <= 1 + h(p) - h(p*alpha),
    together with 0 <= Re <= R1. The alpha sweep uses a 1e-4 grid followed
    by golden-section refinement around the best grid point.
    """
    _check_tap(p)
    r0, r1, re = t
    if min(r0, r1, re) < -tol:
        return False
    if re > r1 + tol:
        return False
    if r0 + r1 > 1.0 + tol:
        return False
    hp = binary_entropy(p)

    grid = np.linspace(0.0, 0.5, int(round(0.5 / ALPHA_STEP)) + 1)
    ha = _h_arr(grid)
    hpa = _h_arr(p + grid * (1.0 - 2.0 * p))
    slacks = np.minimum(
        ha - r1, np.minimum(ha + hp - hpa - re, 1.0 + hp - hpa - r0 - re)
    )
    best = int(np.argmax(slacks))

    def slack(alpha: float) -> float:
        h_a = binary_entropy(alpha)
        h_pa = binary_entropy(star(p, alpha))
        return min(h_a - r1, h_a + hp - h_pa - re, 1.0 + hp - h_pa - r0 - re)

    lo = max(0.0, grid[best] - ALPHA_STEP)
    hi = min(0.5, grid[best] + ALPHA_STEP)
    return _golden_max(slack, lo, hi) >= -tol


def binary_secrecy_capacity(r0: float, p: float) -> tuple[float, float]:
    """Largest perfect-secrecy rate R1 at common rate R0 on the binary channel.

    Returns (R1, alpha_star) with alpha_star = h_inv(1 - R0) and
    R1 = h(alpha_star) + h(p) - h(p * alpha_star).
    """
    _check_tap(p)
    if not 0.0 <= r0 <= 1.0:
        raise ValueError(f"common rate R0 must lie in [0, 1], got {r0}")
    alpha = binary_entropy_inv(1.0 - r0)
    r1 = binary_entropy(alpha) + binary_entropy(p) - binary_entropy(star(p, alpha))
    return r1, alpha


def max_gaussian_sum_rate(g: GaussianGmac) -> float:
    """Largest supported common rate, reached with fully correlated inputs."""
    return gauss_rate(g.p1 + g.p2 + 2.0 * math.sqrt(g.p1 * g.p2), g.n)


def gaussian_flat_knee(g: GaussianGmac) -> float:
    """Common rate up to which the secrecy boundary stays flat."""
    return gauss_rate(g.p2, g.p1 + g.n)


def _gaussian_r0_of_alpha(g: GaussianGmac, alpha: float) -> float:
    """Common rate at which the sum constraint meets the secrecy constraint
    for a given private power share alpha; strictly decreasing in alpha."""
    num = g.p1 + g.p2 + 2.0 * math.sqrt((1.0 - alpha) * g.p1 * g.p2) + g.n
    return 0.5 * math.log2(num / (alpha * g.p1 + g.n))


def gaussian_secrecy_capacity(r0: float, g: GaussianGmac) -> tuple[float, float]:
    """Largest perfect-secrecy rate R1 at common rate R0 on the Gaussian channel.

    Below the knee the boundary is flat at full private power (alpha = 1);
    beyond it, alpha_star solves r0 = _gaussian_r0_of_alpha by bisection.
    """
    max_r0 = max_gaussian_sum_rate(g)
    if not 0.0 <= r0 <= max_r0 + EXACT_TOL:
        raise ValueError(
            f"common rate R0 must lie in [0, {max_r0:.12g}] for this channel, got {r0}"
        )
    if r0 <= gaussian_flat_knee(g):
        alpha = 1.0
    elif r0 >= max_r0:
        alpha = 0.0
    else:
        lo, hi = 0.0, 1.0
        for _ in range(BISECT_MAX_ITER):
            if hi - lo <= BISECT_WIDTH:
                break
            mid = 0.5 * (lo + hi)
            if _gaussian_r0_of_alpha(g, mid) >= r0:
                lo = mid
            else:
                hi = mid
        alpha = 0.5 * (lo + hi)
    r1 = gauss_rate(alpha * g.p1, g.n) - gauss_rate(alpha * g.p1, g.n2)
    return r1, alpha


def gaussian_region_member(t: RateTriple, g: GaussianGmac, tol: float = BOUNDARY_TOL) -> bool:
    """Membership in the Gaussian capacity-equivocation region.

    A triple belongs iff some alpha in [0, 1] satisfies
        R1 <= ga(alpha),           R0 + R1 <= gs(alpha),
        Re <= ga(alpha) - gb(alpha),
        R0 + Re <= gs(alpha) - gb(alpha),
    with ga = rate(alpha P1, N), gb = rate(alpha P1, N2) and gs the
    correlated sum rate, together with 0 <= Re <= R1.
    """
    r0, r1, re = t
    if min(r0, r1, re) < -tol:
        return False
    if re > r1 + tol:
        return False

    grid = np.linspace(0.0, 1.0, int(round(1.0 / ALPHA_STEP)) + 1)
    ga = 0.5 * np.log2(1.0 + grid * g.p1 / g.n)
    gb = 0.5 * np.log2(1.0 + grid * g.p1 / g.n2)
    gs = 0.5 * np.log2(
        1.0 + (g.p1 + g.p2 + 2.0 * np.sqrt((1.0 - grid) * g.p1 * g.p2)) / g.n
    )
    slacks = np.minimum(
        np.minimum(ga - r1, gs - r0 - r1),
        np.minimum(ga - gb - re, gs - gb - r0 - re),
    )
    best = int(np.argmax(slacks))

    def slack(alpha: float) -> float:
        a = gauss_rate(alpha * g.p1, g.n)
        b = gauss_rate(alpha * g.p1, g.n2)
        s = gauss_rate(g.p1 + g.p2 + 2.0 * math.sqrt((1.0 - alpha) * g.p1 * g.p2), g.n)
        return min(a - r1, s - r0 - r1, a - b - re, s - b - r0 - re)

    lo = max(0.0, grid[best] - ALPHA_STEP)
    hi = min(1.0, grid[best] + ALPHA_STEP)
    return _golden_max(slack, lo, hi) >= -tol


def gaussian_mac_capacity(r0: float, g: GaussianGmac) -> tuple[float, float]:
    """Boundary of the no-secrecy capacity region: the largest R1 with
    R1 <= ga(alpha) and R0 + R1 <= gs(alpha) for some alpha in [0, 1]."""
    max_r0 = max_gaussian_sum_rate(g)
    if not 0.0 <= r0 <= max_r0 + EXACT_TOL:
        raise ValueError(
            f"common rate R0 must lie in [0, {max_r0:.12g}] for this channel, got {r0}"
        )

    def ga(alpha: float) -> float:
        return gauss_rate(alpha * g.p1, g.n)

    def gs(alpha: float) -> float:
        return gauss_rate(g.p1 + g.p2 + 2.0 * math.sqrt((1.0 - alpha) * g.p1 * g.p2), g.n)

    if ga(1.0) <= gs(1.0) - r0:
        return ga(1.0), 1.0
    if r0 >= max_r0:
        return 0.0, 0.0
    lo, hi = 0.0, 1.0
    for _ in range(BISECT_MAX_ITER):
        if hi - lo <= BISECT_WIDTH:
            break
        mid = 0.5 * (lo + hi)
        if ga(mid) <= gs(mid) - r0:
            lo = mid
        else:
            hi = mid
    alpha = 0.5 * (lo + hi)
    return min(ga(alpha), max(gs(alpha) - r0, 0.0)), alpha


class CurvePoint(NamedTuple):
    r0: float
    r1: float
    alpha_star: float


@dataclass(frozen=True)
class RegionCurve:
    """Sampled secrecy boundary: R0 strictly increasing, R1 non-increasing."""

    model: str
    params: dict
    points: tuple[CurvePoint, ...]

    def __post_init__(self) -> None:
        pts = tuple(CurvePoint(*p) for p in self.points)
        if len(pts) < 2:
            raise ValueError("a region curve needs at least two samples")
        for a, b in zip(pts, pts[1:]):
            if b.r0 <= a.r0:
                raise ValueError("curve R0 samples must be strictly increasing")
            if b.r1 > a.r1 + EXACT_TOL:
                raise ValueError("curve R1 samples must be non-increasing")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "params", dict(self.params))


def _thread_count(threads: int | None) -> int:
    if threads is not None:
        return max(1, int(threads))
    env = os.environ.get(THREADS_ENV_VAR)
    if env is None or env == "":
        return 1
    try:
        return max(1, int(env))
    except ValueError as exc:
        raise ValueError(f"{THREADS_ENV_VAR} must be an integer, got {env!r}") from exc


def _map_ordered(fn: Callable, xs, threads: int | None) -> list:
    k = _thread_count(threads)
    if k <= 1 or len(xs) < 4:
        return [fn(x) for x in xs]
    with ThreadPoolExecutor(max_workers=k) as ex:
        return list(ex.map(fn, xs))


def deterministic_secrecy_curve(n_points: int = DEFAULT_POINTS) -> RegionCurve:
    grid = np.linspace(0.0, 1.0, n_points)
    pts = [CurvePoint(float(r0), float(1.0 - r0), 0.0) for r0 in grid]
    return RegionCurve("deterministic", {}, tuple(pts))


def binary_secrecy_curve(
    p: float, n_points: int = DEFAULT_POINTS, threads: int | None = None
) -> RegionCurve:
    _check_tap(p)
    grid = np.linspace(0.0, 1.0, n_points)
    rows = _map_ordered(lambda r0: binary_secrecy_capacity(float(r0), p), grid, threads)
    pts = [CurvePoint(float(r0), r1, a) for r0, (r1, a) in zip(grid, rows)]
    return RegionCurve("binary", {"p": p}, tuple(pts))


def gaussian_secrecy_curve(
    g: GaussianGmac, n_points: int = DEFAULT_POINTS, threads: int | None = None
) -> RegionCurve:
    grid = np.linspace(0.0, max_gaussian_sum_rate(g), n_points)
    rows = _map_ordered(lambda r0: gaussian_secrecy_capacity(float(r0), g), grid, threads)
    pts = [CurvePoint(float(r0), r1, a) for r0, (r1, a) in zip(grid, rows)]
    params = {"p1": g.p1, "p2": g.p2, "n": g.n, "n2": g.n2}
    return RegionCurve("gaussian", params, tuple(pts))


def gaussian_mac_curve(
    g: GaussianGmac, n_points: int = DEFAULT_POINTS, threads: int | None = None
) -> RegionCurve:
    grid = np.linspace(0.0, max_gaussian_sum_rate(g), n_points)
    rows = _map_ordered(lambda r0: gaussian_mac_capacity(float(r0), g), grid, threads)
    pts = [CurvePoint(float(r0), r1, a) for r0, (r1, a) in zip(grid, rows)]
    params = {"p1": g.p1, "p2": g.p2, "n": g.n, "n2": g.n2}
    return RegionCurve("gaussian-mac", params, tuple(pts))


def time_sharing_curve(p: float, n_points: int = DEFAULT_POINTS) -> RegionCurve:
    """Straight segment between the two extreme perfect-secrecy operating
    points (0, h(p)) and (1, 0); the third column carries the share weight."""
    _check_tap(p)
    hp = binary_entropy(p)
    grid = np.linspace(0.0, 1.0, n_points)
    pts = [CurvePoint(float(r0), float((1.0 - r0) * hp), float(r0)) for r0 in grid]
    return RegionCurve("binary-timeshare", {"p": p}, tuple(pts))


def sweep_secrecy_curve(
    model: str, params: dict, n_points: int = DEFAULT_POINTS, threads: int | None = None
) -> RegionCurve:
    """Sample the secrecy boundary of one of the named models.

    model is "deterministic", "binary" (params: p) or "gaussian"
    (params: p1, p2, n, n2).
    """
    if model == "deterministic":
        return deterministic_secrecy_curve(n_points)
    if model == "binary":
        return binary_secrecy_curve(params["p"], n_points, threads)
    if model == "gaussian":
        g = GaussianGmac(params["p1"], params["p2"], params["n"], params["n2"])
        return gaussian_secrecy_curve(g, n_points, threads)
    raise ValueError(f"unknown region model {model!r}")


def write_curve_csv(curve: RegionCurve, stream) -> None:
    """Emit the fixed five-column schema with 12 significant digits."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    params = json.dumps(curve.params, sort_keys=True, separators=(",", ":"))
    for pt in curve.points:
        writer.writerow(
            [curve.model, params, f"{pt.r0:.12g}", f"{pt.r1:.12g}", f"{pt.alpha_star:.12g}"]
        )


def save_curve_csv(curve: RegionCurve, path) -> None:
    with open(path, "w", newline="", encoding="ascii") as fh:
        write_curve_csv(curve, fh)
