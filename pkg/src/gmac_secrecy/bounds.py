"""Numeric evaluation of the region bound formulas.

For a finite channel and a factorized input law p(q) p(x1|q) p(x2|q) this
module computes the four mutual-information bounds that cut out the
capacity-equivocation region, searches input-distribution grids for the
best perfect-secrecy rate, evaluates the Gaussian bounds from covariance
algebra, and runs the two scalar verification scans (strict convexity of
the star-entropy composition, and the binary entropy-power bound for
sequences pushed through a memoryless binary symmetric tap).
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

import numpy as np
from scipy.optimize import minimize

from .channels import FiniteGmac, GaussianGmac, is_degraded, marginals
from .entropy import binary_entropy, binary_entropy_inv, gauss_rate, star

__all__ = [
    "GridConfigError",
    "InputDistribution",
    "RegionBounds",
    "region_bounds",
    "binary_achievability_distribution",
    "max_secrecy_rate_over_grid",
    "gaussian_region_bounds",
    "gaussian_region_bounds_closed_form",
    "star_entropy_convexity_gap",
    "binary_epi_slack",
    "binary_epi_scan",
    "EpiEqualityCase",
    "EpiScanReport",
]

DIST_SUM_TOL = 1e-12
DEFAULT_SIMPLEX_STEP = 1.0 / 32.0
DEFAULT_EPI_STEP = 1.0 / 24.0
EPI_SLACK_TOL = 1e-9
EPI_EQUALITY_THRESHOLD = 1e-6
EPI_INDEPENDENCE_TOL = 1e-9
EPI_ENTROPY_TOL = 1e-3
GRID_COMBO_LIMIT = 3_000_000
REFINE_MIN_DELTA = 1e-7
REFINE_MAX_EVALS = 50_000


class GridConfigError(ValueError):
    """A grid request that cannot be honored at desk scale."""


def _entropy_rows(p: np.ndarray) -> np.ndarray:
    """Entropy in bits along the last axis, with 0 log 0 = 0."""
    safe = np.where(p > 0.0, p, 1.0)
    return -np.sum(p * np.log2(safe), axis=-1)


def _check_simplex(name: str, rows: np.ndarray) -> None:
    if not np.all(np.isfinite(rows)):
        raise ValueError(f"{name} has non-finite entries")
    if np.any(rows < 0.0):
        raise ValueError(f"{name} has negative entries")
    sums = rows.sum(axis=-1)
    if np.max(np.abs(sums - 1.0)) > DIST_SUM_TOL:
        raise ValueError(f"each row of {name} must sum to 1 within 1e-12")


@dataclass(frozen=True, eq=False)
class InputDistribution:
    """Factorized channel input law p(q) p(x1|q) p(x2|q).

    x1 and x2 are conditionally independent given the time-sharing letter
    q, which is the only coupling the region formulas admit.
    """

    p_q: np.ndarray
    p_x1_given_q: np.ndarray
    p_x2_given_q: np.ndarray

    def __post_init__(self) -> None:
        q = np.array(self.p_q, dtype=float)
        x1 = np.array(self.p_x1_given_q, dtype=float)
        x2 = np.array(self.p_x2_given_q, dtype=float)
        if q.ndim != 1 or x1.ndim != 2 or x2.ndim != 2:
            raise ValueError("p_q must be a vector and the conditionals matrices")
        if x1.shape[0] != q.size or x2.shape[0] != q.size:
            raise ValueError("conditional tables must have one row per q letter")
        _check_simplex("p_q", q[None, :])
        _check_simplex("p_x1_given_q", x1)
        _check_simplex("p_x2_given_q", x2)
        for arr, name in ((q, "p_q"), (x1, "p_x1_given_q"), (x2, "p_x2_given_q")):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def n_q(self) -> int:
        return self.p_q.size


class RegionBounds(NamedTuple):
    """The four rate caps evaluated at one input law."""

    r1_max: float
    sum_max: float
    re_max: float
    r0_plus_re_max: float


def _joint_table(ch: FiniteGmac, d: InputDistribution) -> np.ndarray:
    """Joint p(q, x1, x2, y, y2) as a five-axis table."""
    return (
        d.p_q[:, None, None, None, None]
        * d.p_x1_given_q[:, :, None, None, None]
        * d.p_x2_given_q[:, None, :, None, None]
        * ch.transition[None, :, :, :, :]
    )


def _marginal_entropy(joint: np.ndarray, keep: tuple[int, ...]) -> float:
    drop = tuple(ax for ax in range(joint.ndim) if ax not in keep)
    return float(_entropy_rows(joint.sum(axis=drop).ravel()[None, :])[0])


def _bounds_from_joint(joint: np.ndarray) -> RegionBounds:
    # axes: 0 = q, 1 = x1, 2 = x2, 3 = y, 4 = y2
    h = lambda *keep: _marginal_entropy(joint, keep)
    h_qx1x2 = h(0, 1, 2)
    h_qx2 = h(0, 2)
    i_x1_y = h_qx1x2 + h(0, 2, 3) - h(0, 1, 2, 3) - h_qx2
    i_x1_y2 = h_qx1x2 + h(0, 2, 4) - h(0, 1, 2, 4) - h_qx2
    i_sum = h(1, 2) + h(3,) - h(1, 2, 3)
    return RegionBounds(
        i_x1_y,
        i_sum,
        max(0.0, i_x1_y - i_x1_y2),
        max(0.0, i_sum - i_x1_y2),
    )


def _check_compatible(ch: FiniteGmac, d: InputDistribution) -> None:
    nx1, nx2 = len(ch.alphabet_x1), len(ch.alphabet_x2)
    if d.p_x1_given_q.shape[1] != nx1 or d.p_x2_given_q.shape[1] != nx2:
        raise ValueError(
            "input distribution shape "
            f"({d.p_x1_given_q.shape[1]}, {d.p_x2_given_q.shape[1]}) does not "
            f"match channel alphabets ({nx1}, {nx2})"
        )
    if d.n_q > nx1 * nx2 + 1:
        raise ValueError(
            f"|Q| = {d.n_q} exceeds the cardinality bound {nx1 * nx2 + 1}"
        )


def _warn_if_not_degraded(ch: FiniteGmac) -> None:
    degraded, violation = is_degraded(ch)
    if not degraded:
        warnings.warn(
            "channel is not degraded (violation "
            f"{violation:.3g}); the region formulas are evaluated as stated "
            "but carry no converse guarantee here",
            UserWarning,
            stacklevel=3,
        )


def region_bounds(ch: FiniteGmac, d: InputDistribution, *, check_degraded: bool = True) -> RegionBounds:
    """Evaluate the four bounds at one input law.

    Returns caps on R1, R0 + R1, Re and R0 + Re. The equivocation caps are
    clipped below at zero. A non-degraded channel triggers a warning, not a
    failure.
    """
    _check_compatible(ch, d)
    if check_degraded:
        _warn_if_not_degraded(ch)
    return _bounds_from_joint(_joint_table(ch, d))


def binary_achievability_distribution(alpha: float) -> InputDistribution:
    """The coded input law for the binary channel: q uniform, x2 fixed to 1,
    x1 = q xor Bernoulli(alpha)."""
    if not 0.0 <= alpha <= 0.5:
        raise ValueError(f"alpha must lie in [0, 1/2], got {alpha}")
    return InputDistribution(
        np.array([0.5, 0.5]),
        np.array([[1.0 - alpha, alpha], [alpha, 1.0 - alpha]]),
        np.array([[0.0, 1.0], [0.0, 1.0]]),
    )


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _simplex_grid(parts: int, denominator: int) -> np.ndarray:
    rows = np.array(list(_compositions(denominator, parts)), dtype=float)
    return rows / denominator


def _per_q_tables(
    U: np.ndarray, V: np.ndarray, p_y: np.ndarray, p_y2: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Per-letter information terms on the product grid of x1 and x2 laws.

    Returns, flattened over (u, v) pairs: I(X1;Y|X2), I(X1;Y2|X2),
    H(Y|X1,X2) and the output law of y.
    """
    cond_y = np.einsum("ua,aby->uby", U, p_y)
    cond_y2 = np.einsum("ua,aby->uby", U, p_y2)
    h_y_x2 = np.einsum("ub,vb->uv", _entropy_rows(cond_y), V)
    h_y2_x2 = np.einsum("ub,vb->uv", _entropy_rows(cond_y2), V)
    h_y_rows = _entropy_rows(p_y)
    h_y2_rows = _entropy_rows(p_y2)
    h_y_x1x2 = np.einsum("ua,vb,ab->uv", U, V, h_y_rows)
    h_y2_x1x2 = np.einsum("ua,vb,ab->uv", U, V, h_y2_rows)
    f1 = (h_y_x2 - h_y_x1x2).ravel()
    f2 = (h_y2_x2 - h_y2_x1x2).ravel()
    gee = h_y_x1x2.ravel()
    py = np.einsum("uby,vb->uvy", cond_y, V).reshape(f1.size, -1)
    return f1, f2, gee, py


def _sweep_two_q(
    f1: np.ndarray, f2: np.ndarray, gee: np.ndarray, py: np.ndarray, m: int, r0: float
) -> tuple[float, float, int, int]:
    best_val = -math.inf
    best = (0.0, 0, 0)
    for k in range(m + 1):
        w = k / m
        F1 = w * f1[:, None] + (1.0 - w) * f1[None, :]
        F2 = w * f2[:, None] + (1.0 - w) * f2[None, :]
        G = w * gee[:, None] + (1.0 - w) * gee[None, :]
        PY = w * py[:, None, :] + (1.0 - w) * py[None, :, :]
        HY = _entropy_rows(PY)
        SUM = HY - G
        obj = np.minimum(
            np.minimum(np.maximum(F1 - F2, 0.0), F1),
            np.minimum(SUM - r0, np.maximum(SUM - F2, 0.0) - r0),
        )
        flat = int(np.argmax(obj))
        val = float(obj.flat[flat])
        if val > best_val:
            best_val = val
            best = (w, flat // f1.size, flat % f1.size)
    return (best_val,) + best


def _sweep_generic(
    f1: np.ndarray, f2: np.ndarray, gee: np.ndarray, py: np.ndarray, m: int, r0: float, n_q: int
) -> tuple[float, np.ndarray, tuple[int, ...]]:
    T = f1.size
    W = _simplex_grid(n_q, m)
    combos = W.shape[0] * T**n_q
    if combos > GRID_COMBO_LIMIT:
        raise GridConfigError(
            f"grid would enumerate {combos} input laws for |Q| = {n_q}; "
            "increase grid_step or lower n_q"
        )
    best_val = -math.inf
    best_w = W[0]
    best_assign: tuple[int, ...] = (0,) * n_q
    for assign in itertools.product(range(T), repeat=n_q):
        idx = list(assign)
        F1 = W @ f1[idx]
        F2 = W @ f2[idx]
        G = W @ gee[idx]
        HY = _entropy_rows(W @ py[idx])
        SUM = HY - G
        obj = np.minimum(
            np.minimum(np.maximum(F1 - F2, 0.0), F1),
            np.minimum(SUM - r0, np.maximum(SUM - F2, 0.0) - r0),
        )
        k = int(np.argmax(obj))
        val = float(obj[k])
        if val > best_val:
            best_val, best_w, best_assign = val, W[k], assign
    return best_val, best_w, best_assign


def _slacks(ch: FiniteGmac, r0: float, d: InputDistribution) -> np.ndarray:
    """Sorted vector of the four rate slacks; the first entry is the
    usable secrecy rate before clipping at zero."""
    b = region_bounds(ch, d, check_degraded=False)
    return np.sort(
        np.array([b.re_max, b.r1_max, b.sum_max - r0, b.r0_plus_re_max - r0])
    )


def _objective(ch: FiniteGmac, r0: float, d: InputDistribution) -> float:
    return max(0.0, float(_slacks(ch, r0, d)[0]))


def _lex_better(a: np.ndarray, b: np.ndarray) -> bool:
    for x, y in zip(a, b):
        if x > y + 1e-15:
            return True
        if x < y - 1e-15:
            return False
    return False


def _move_specs(d: InputDistribution) -> list[tuple[str, int, int, int]]:
    specs: list[tuple[str, int, int, int]] = []
    for kind, rows, width in (
        ("q", 1, d.p_q.size),
        ("x1", d.n_q, d.p_x1_given_q.shape[1]),
        ("x2", d.n_q, d.p_x2_given_q.shape[1]),
    ):
        for row in range(rows):
            for i in range(width):
                for j in range(width):
                    if i != j:
                        specs.append((kind, row, i, j))
    return specs


def _apply_move(
    d: InputDistribution, kind: str, row: int, i: int, j: int, delta: float
) -> InputDistribution | None:
    if kind == "q":
        vec = d.p_q
    elif kind == "x1":
        vec = d.p_x1_given_q[row]
    else:
        vec = d.p_x2_given_q[row]
    mu = min(delta, float(vec[i]))
    if mu <= 0.0:
        return None
    moved = vec.copy()
    moved[i] -= mu
    moved[j] += mu
    if kind == "q":
        return InputDistribution(moved, d.p_x1_given_q, d.p_x2_given_q)
    if kind == "x1":
        nx1 = d.p_x1_given_q.copy()
        nx1[row] = moved
        return InputDistribution(d.p_q, nx1, d.p_x2_given_q)
    nx2 = d.p_x2_given_q.copy()
    nx2[row] = moved
    return InputDistribution(d.p_q, d.p_x1_given_q, nx2)


def _neighbors(
    d: InputDistribution, delta: float, freeze_x2: bool = False
) -> Iterator[InputDistribution]:
    specs = _move_specs(d)
    if freeze_x2:
        specs = [s for s in specs if s[0] != "x2"]
    for spec in specs:
        cand = _apply_move(d, *spec, delta)
        if cand is not None:
            yield cand
    # Coordinated shifts on two rows of the same conditional. The best
    # direction often changes both rows at once (for example nudging the
    # crossover of a symmetric pair), and the min of the slacks has a
    # kink there that defeats one-row moves.
    for ka, ra, ia, ja in specs:
        if ka == "q":
            continue
        for kb, rb, ib, jb in specs:
            if kb != ka or rb <= ra:
                continue
            first = _apply_move(d, ka, ra, ia, ja, delta)
            if first is None:
                continue
            cand = _apply_move(first, kb, rb, ib, jb, delta)
            if cand is not None:
                yield cand


def _refine_local(
    ch: FiniteGmac,
    r0: float,
    d: InputDistribution,
    start_delta: float,
    freeze_x2: bool = False,
) -> tuple[float, InputDistribution]:
    # Hill climb on the sorted slack vector, compared lexicographically.
    # Plain ascent on the smallest slack alone stalls where two slacks
    # cross; raising the second-smallest at a tie lets the climb slide
    # along the crossing instead.
    slack = _slacks(ch, r0, d)
    delta = start_delta
    evals = 0
    while delta > REFINE_MIN_DELTA and evals < REFINE_MAX_EVALS:
        best_slack, best_d = slack, None
        for cand in _neighbors(d, delta, freeze_x2):
            cand_slack = _slacks(ch, r0, cand)
            evals += 1
            if _lex_better(cand_slack, best_slack):
                best_slack, best_d = cand_slack, cand
        if best_d is None:
            delta *= 0.5
        else:
            d, slack = best_d, best_slack
    return max(0.0, float(slack[0])), d


def _dist_to_vars(d: InputDistribution) -> np.ndarray:
    return np.sqrt(
        np.concatenate([d.p_q, d.p_x1_given_q.ravel(), d.p_x2_given_q.ravel()])
    )


def _dist_from_vars(z: np.ndarray, n_q: int, nx1: int, nx2: int) -> InputDistribution:
    # Squared coordinates renormalized per row: any real vector maps to a
    # valid law, so the downhill simplex can move freely.
    z = np.square(z)
    q = z[:n_q]
    x1 = z[n_q:n_q + n_q * nx1].reshape(n_q, nx1)
    x2 = z[n_q + n_q * nx1:].reshape(n_q, nx2)
    with np.errstate(invalid="ignore", divide="ignore"):
        q = q / q.sum()
        x1 = x1 / x1.sum(axis=1, keepdims=True)
        x2 = x2 / x2.sum(axis=1, keepdims=True)
    return InputDistribution(q, x1, x2)


def _polish(
    ch: FiniteGmac, r0: float, d: InputDistribution
) -> tuple[float, InputDistribution]:
    """Downhill-simplex polish of the secrecy objective around d.

    The mass-move climb handles coarse basin selection but stalls on
    directions that couple the q weights with several conditional rows at
    once; the simplex search follows those directions. Every candidate is
    still scored with the exact bound evaluation, so the returned value
    never leaves the achievable side.
    """
    n_q, nx1 = d.n_q, d.p_x1_given_q.shape[1]
    nx2 = d.p_x2_given_q.shape[1]

    def loss(z: np.ndarray) -> float:
        try:
            cand = _dist_from_vars(z, n_q, nx1, nx2)
        except ValueError:
            return 1.0
        return -_objective(ch, r0, cand)

    res = minimize(
        loss,
        _dist_to_vars(d),
        method="Nelder-Mead",
        options={"maxiter": 4000, "xatol": 1e-10, "fatol": 1e-12},
    )
    best_val, best_d = _objective(ch, r0, d), d
    try:
        cand = _dist_from_vars(res.x, n_q, nx1, nx2)
    except ValueError:
        return best_val, best_d
    val = _objective(ch, r0, cand)
    if val > best_val:
        return val, cand
    return best_val, best_d


def max_secrecy_rate_over_grid(
    ch: FiniteGmac,
    r0: float,
    grid_step: float = DEFAULT_SIMPLEX_STEP,
    n_q: int = 2,
    refine: bool = True,
) -> tuple[float, InputDistribution]:
    """Best perfect-secrecy rate found on an input-distribution grid.

    Maximizes min(re_max, r1_max, sum_max - r0, r0_plus_re_max - r0) over
    all factorized laws whose simplex coordinates are multiples of
    grid_step, then locally refines the winner with shrinking mass moves.
    The refinement evaluates the same exact bounds, so the result stays on
    the achievable side of the closed forms up to float error.
    """
    nx1, nx2 = len(ch.alphabet_x1), len(ch.alphabet_x2)
    if nx1 * nx2 > 9:
        raise GridConfigError(
            f"grid search supports |X1|*|X2| <= 9, got {nx1 * nx2}"
        )
    if r0 < 0.0:
        raise ValueError(f"common rate R0 must be nonnegative, got {r0}")
    if not 1 <= n_q <= nx1 * nx2 + 1:
        raise GridConfigError(
            f"n_q must lie in [1, {nx1 * nx2 + 1}], got {n_q}"
        )
    m = round(1.0 / grid_step)
    if m < 1 or abs(m * grid_step - 1.0) > 1e-9:
        raise GridConfigError(
            f"grid_step must be the reciprocal of a positive integer, got {grid_step}"
        )
    _warn_if_not_degraded(ch)

    p_y, p_y2 = marginals(ch)
    U = _simplex_grid(nx1, m)
    V_full = _simplex_grid(nx2, m)

    def solve(V: np.ndarray) -> InputDistribution:
        f1, f2, gee, py = _per_q_tables(U, V, p_y, p_y2)
        nv = V.shape[0]

        def rows_for(t: int) -> tuple[np.ndarray, np.ndarray]:
            return U[t // nv], V[t % nv]

        if n_q == 2:
            _, w, i, j = _sweep_two_q(f1, f2, gee, py, m, r0)
            u_i, v_i = rows_for(i)
            u_j, v_j = rows_for(j)
            return InputDistribution(
                np.array([w, 1.0 - w]), np.stack([u_i, u_j]), np.stack([v_i, v_j])
            )
        _, w_row, assign = _sweep_generic(f1, f2, gee, py, m, r0, n_q)
        rows = [rows_for(t) for t in assign]
        return InputDistribution(
            np.asarray(w_row),
            np.stack([r[0] for r in rows]),
            np.stack([r[1] for r in rows]),
        )

    d = solve(V_full)
    if not refine:
        return _objective(ch, r0, d), d

    # The climb can stall against a crossing of slack surfaces whose
    # resolution needs the second user's law at a vertex. Seed one extra
    # start per vertex from a sweep with that row pinned, pre-climbed
    # inside the class, and keep the best endpoint overall.
    starts = [(d, False)]
    for j in range(nx2):
        vertex = np.zeros((1, nx2))
        vertex[0, j] = 1.0
        starts.append((solve(vertex), True))
    best_val, best_d = -np.inf, d
    for start, in_class in starts:
        if in_class:
            _, start = _refine_local(ch, r0, start, grid_step, freeze_x2=True)
        _, cand = _refine_local(ch, r0, start, grid_step)
        val, cand = _polish(ch, r0, cand)
        if val > best_val:
            best_val, best_d = val, cand
    return best_val, best_d


def gaussian_region_bounds(g: GaussianGmac, alpha: float) -> RegionBounds:
    """The four Gaussian bounds computed from covariance algebra.

    Builds the joint covariance of (u, x1, x2, y, y2) under the coded
    input law: u is the shared unit-variance direction standing in for
    the time-sharing letter, x2 places its full power P2 on u, x1 draws
    the share 1 - alpha of its power from u, and the tap is y plus extra
    noise. Every mutual information is read off conditional variances;
    the private bounds condition on u itself so that they track the
    formula even when P2 = 0 makes x2 silent about u.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"power share alpha must lie in [0, 1], got {alpha}")
    c = math.sqrt((1.0 - alpha) * g.p1)
    s = math.sqrt(g.p2)
    base = np.diag([1.0, alpha * g.p1, g.n, g.n2 - g.n])
    rows = np.array(
        [
            [1.0, 0.0, 0.0, 0.0],
            [c, 1.0, 0.0, 0.0],
            [s, 0.0, 0.0, 0.0],
            [c + s, 1.0, 1.0, 0.0],
            [c + s, 1.0, 1.0, 1.0],
        ]
    )
    cov = rows @ base @ rows.T
    u, x1, x2, y, y2 = 0, 1, 2, 3, 4

    def cond_var(i: int, given: list[int]) -> float:
        block = cov[np.ix_(given, given)]
        cross = cov[i, given]
        return float(cov[i, i] - cross @ np.linalg.pinv(block, hermitian=True) @ cross)

    var_y_x2 = cond_var(y, [x2, u])
    var_y_all = cond_var(y, [x1, x2])
    var_y2_x2 = cond_var(y2, [x2, u])
    var_y2_all = cond_var(y2, [x1, x2])
    r1 = 0.5 * math.log2(var_y_x2 / var_y_all)
    i_tap = 0.5 * math.log2(var_y2_x2 / var_y2_all)
    sum_rate = 0.5 * math.log2(cov[y, y] / var_y_all)
    return RegionBounds(
        r1, sum_rate, max(0.0, r1 - i_tap), max(0.0, sum_rate - i_tap)
    )


def gaussian_region_bounds_closed_form(g: GaussianGmac, alpha: float) -> RegionBounds:
    """The same four bounds from the printed closed forms."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"power share alpha must lie in [0, 1], got {alpha}")
    r1 = gauss_rate(alpha * g.p1, g.n)
    i_tap = gauss_rate(alpha * g.p1, g.n2)
    sum_rate = gauss_rate(
        g.p1 + g.p2 + 2.0 * math.sqrt((1.0 - alpha) * g.p1 * g.p2), g.n
    )
    return RegionBounds(
        r1, sum_rate, max(0.0, r1 - i_tap), max(0.0, sum_rate - i_tap)
    )


def star_entropy_convexity_gap(rho: float, grid_step: float = 1e-3) -> float:
    """Smallest interior second difference of u -> h(rho * h_inv(u)).

    A positive return certifies strict convexity on the grid; the value
    degenerates to about zero as rho approaches 1/2, where the composition
    flattens to the constant 1.
    """
    if not 0.0 < rho <= 0.5:
        raise ValueError(f"rho must lie in (0, 1/2], got {rho}")
    k = round(1.0 / grid_step)
    if k < 2 or abs(k * grid_step - 1.0) > 1e-9:
        raise ValueError(
            f"grid_step must be the reciprocal of an integer >= 2, got {grid_step}"
        )
    f = [
        binary_entropy(star(rho, binary_entropy_inv(i / k))) for i in range(k + 1)
    ]
    return min(f[i - 1] + f[i + 1] - 2.0 * f[i] for i in range(1, k))


def _bsc_block_matrix(n: int, p0: float) -> np.ndarray:
    size = 2**n
    w = np.empty((size, size))
    for x in range(size):
        for y in range(size):
            d = bin(x ^ y).count("1")
            w[x, y] = (p0**d) * ((1.0 - p0) ** (n - d))
    return w


def binary_epi_slack(probs: Iterable[float], p0: float, v: float) -> float:
    """Slack of one input law against the tap-output entropy bound.

    probs is a distribution over n-bit blocks (bit i of the outcome index
    is symbol i); the bound is n * h(p0 * h_inv(v)).
    """
    p = np.array(list(probs), dtype=float)
    n = int(round(math.log2(p.size)))
    if 2**n != p.size:
        raise ValueError(f"block distribution length must be a power of two, got {p.size}")
    _check_simplex("block distribution", p[None, :])
    if not 0.0 < p0 <= 0.5:
        raise ValueError(f"tap crossover p0 must lie in (0, 1/2], got {p0}")
    if not 0.0 <= v <= 1.0:
        raise ValueError(f"entropy threshold v must lie in [0, 1], got {v}")
    w = _bsc_block_matrix(n, p0)
    bound = n * binary_entropy(star(p0, binary_entropy_inv(v)))
    return float(_entropy_rows((p @ w)[None, :])[0]) - bound


@dataclass(frozen=True)
class EpiEqualityCase:
    """One grid law whose tap-output entropy meets the bound."""

    probs: tuple[float, ...]
    slack: float
    product_gap: float
    symbol_entropies: tuple[float, ...]
    matches_equality_condition: bool


@dataclass(frozen=True)
class EpiScanReport:
    n: int
    p0: float
    v: float
    grid_step: float
    holds: bool
    min_slack: float
    feasible_count: int
    equality_cases: tuple[EpiEqualityCase, ...]


def _batched_simplex(parts: int, denominator: int, batch: int = 200_000) -> Iterator[np.ndarray]:
    chunk: list[tuple[int, ...]] = []
    for comp in _compositions(denominator, parts):
        chunk.append(comp)
        if len(chunk) >= batch:
            yield np.array(chunk, dtype=float) / denominator
            chunk = []
    if chunk:
        yield np.array(chunk, dtype=float) / denominator


def _equality_case(p: np.ndarray, n: int, v: float, slack: float) -> EpiEqualityCase:
    idx = np.arange(p.size)
    marg = np.array([p[(idx >> i) & 1 == 1].sum() for i in range(n)])
    product = np.ones(p.size)
    for i in range(n):
        bit = (idx >> i) & 1
        product *= np.where(bit == 1, marg[i], 1.0 - marg[i])
    gap = float(np.max(np.abs(p - product)))
    ents = tuple(binary_entropy(float(a)) for a in marg)
    matches = gap <= EPI_INDEPENDENCE_TOL and all(
        abs(e - v) <= EPI_ENTROPY_TOL for e in ents
    )
    return EpiEqualityCase(tuple(float(x) for x in p), slack, gap, ents, matches)


def binary_epi_scan(
    n: int, p0: float, v: float, grid_step: float = DEFAULT_EPI_STEP
) -> EpiScanReport:
    """Exhaustive grid check of the tap-output entropy bound.

    Enumerates every distribution over n-bit blocks with simplex
    coordinates that are multiples of grid_step, keeps those with
    H(X^n) >= n v, pushes each through the n-fold BSC(p0), and compares
    H(Y^n) to n * h(p0 * h_inv(v)). Near-equality laws are recorded along
    with whether they factor into independent symbols of entropy v.
    """
    if n not in (1, 2, 3):
        raise GridConfigError(f"exhaustive scan supports n in {{1, 2, 3}}, got {n}")
    if not 0.0 < p0 <= 0.5:
        raise ValueError(f"tap crossover p0 must lie in (0, 1/2], got {p0}")
    if not 0.0 <= v <= 1.0:
        raise ValueError(f"entropy threshold v must lie in [0, 1], got {v}")
    m = round(1.0 / grid_step)
    if m < 1 or abs(m * grid_step - 1.0) > 1e-9:
        raise GridConfigError(
            f"grid_step must be the reciprocal of a positive integer, got {grid_step}"
        )
    w = _bsc_block_matrix(n, p0)
    bound = n * binary_entropy(star(p0, binary_entropy_inv(v)))
    threshold = n * v

    min_slack = math.inf
    feasible = 0
    cases: list[EpiEqualityCase] = []
    for block in _batched_simplex(2**n, m):
        hx = _entropy_rows(block)
        mask = hx >= threshold
        if not np.any(mask):
            continue
        kept = block[mask]
        feasible += kept.shape[0]
        slack = _entropy_rows(kept @ w) - bound
        low = float(slack.min())
        if low < min_slack:
            min_slack = low
        for row, s in zip(kept[slack < EPI_EQUALITY_THRESHOLD], slack[slack < EPI_EQUALITY_THRESHOLD]):
            cases.append(_equality_case(row, n, v, float(s)))
    return EpiScanReport(
        n=n,
        p0=p0,
        v=v,
        grid_step=grid_step,
        holds=min_slack >= -EPI_SLACK_TOL,
        min_slack=min_slack,
        feasible_count=feasible,
        equality_cases=tuple(cases),
    )
