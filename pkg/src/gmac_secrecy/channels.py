"""Channel models.

Finite channels are joint transition tables p(y, y2 | x1, x2) over named
alphabets, where y is the destination output and y2 the output observed by
the non-confidential user. The Gaussian model is a parameter block
(P1, P2, N, N2) with N < N2, together with its physically degraded
equivalent built by splitting the second receiver's noise as N + (N2 - N).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, NamedTuple

import numpy as np

__all__ = [
    "FiniteGmac",
    "GaussianGmac",
    "DegradedGaussianEquivalent",
    "MarginalPair",
    "DegradednessResult",
    "build_deterministic_example",
    "build_binary_gmac",
    "is_degraded",
    "marginals",
    "degraded_equivalent",
    "marginal_match_gap",
]

ROW_SUM_TOL = 1e-12
DEGRADED_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class FiniteGmac:
    """Finite two-user channel with one transition table per input pair.

    transition is indexed [x1][x2][y][y2] and every [x1][x2] slice is a
    joint distribution over (y, y2).
    """

    alphabet_x1: tuple[Any, ...]
    alphabet_x2: tuple[Any, ...]
    alphabet_y: tuple[Any, ...]
    alphabet_y2: tuple[Any, ...]
    transition: np.ndarray

    def __post_init__(self) -> None:
        for name in ("alphabet_x1", "alphabet_x2", "alphabet_y", "alphabet_y2"):
            alpha = tuple(getattr(self, name))
            if len(alpha) == 0:
                raise ValueError(f"{name} must be non-empty")
            if len(set(alpha)) != len(alpha):
                raise ValueError(f"{name} has repeated symbols: {alpha}")
            object.__setattr__(self, name, alpha)
        t = np.array(self.transition, dtype=float)
        expected = (
            len(self.alphabet_x1),
            len(self.alphabet_x2),
            len(self.alphabet_y),
            len(self.alphabet_y2),
        )
        if t.shape != expected:
            raise ValueError(f"transition shape {t.shape} does not match alphabets {expected}")
        if np.any(t < 0.0):
            raise ValueError("transition has negative entries")
        row_sums = t.sum(axis=(2, 3))
        if np.max(np.abs(row_sums - 1.0)) > ROW_SUM_TOL:
            raise ValueError("each transition[x1][x2] slice must sum to 1 within 1e-12")
        t.setflags(write=False)
        object.__setattr__(self, "transition", t)

    def to_dict(self) -> dict:
        return {
            "alphabets": {
                "x1": list(self.alphabet_x1),
                "x2": list(self.alphabet_x2),
                "y": list(self.alphabet_y),
                "y2": list(self.alphabet_y2),
            },
            "transition": self.transition.tolist(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "FiniteGmac":
        try:
            alphabets = data["alphabets"]
            table = data["transition"]
            args = tuple(tuple(alphabets[k]) for k in ("x1", "x2", "y", "y2"))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"channel document is missing required field: {exc}") from exc
        return cls(*args, np.array(table, dtype=float))


class MarginalPair(NamedTuple):
    """Per-receiver marginals p(y|x1,x2) and p(y2|x1,x2)."""

    p_y: np.ndarray
    p_y2: np.ndarray


class DegradednessResult(NamedTuple):
    is_degraded: bool
    max_violation: float


def build_deterministic_example() -> FiniteGmac:
    """Binary multiplier channel y = x1 AND x2 with y2 = 1 iff x1 <= x2.

    The second output is noiseless but is not a degraded version of y.
    """
    t = np.zeros((2, 2, 2, 2))
    for x1 in range(2):
        for x2 in range(2):
            y = x1 * x2
            y2 = 1 if x1 <= x2 else 0
            t[x1, x2, y, y2] = 1.0
    return FiniteGmac((0, 1), (0, 1), (0, 1), (0, 1), t)


def build_binary_gmac(p: float) -> FiniteGmac:
    """Binary multiplier channel y = x1 AND x2 with tap y2 = y xor Bernoulli(p).

    p = 0 is admitted as the degenerate noiseless tap.
    """
    if not 0.0 <= p <= 0.5:
        raise ValueError(f"tap crossover p must lie in [0, 1/2], got {p}")
    t = np.zeros((2, 2, 2, 2))
    for x1 in range(2):
        for x2 in range(2):
            y = x1 * x2
            t[x1, x2, y, y] = 1.0 - p
            t[x1, x2, y, 1 - y] = p
    return FiniteGmac((0, 1), (0, 1), (0, 1), (0, 1), t)


def marginals(ch: FiniteGmac) -> MarginalPair:
    """Split the joint table into the two per-receiver conditionals."""
    return MarginalPair(ch.transition.sum(axis=3), ch.transition.sum(axis=2))


def is_degraded(ch: FiniteGmac, tol: float = DEGRADED_TOL) -> DegradednessResult:
    """Test whether some p(y2 | y, x2) reproduces the joint table.

    For each (x2, y) the conditional p(y2 | y, x1, x2) must not depend on
    x1. The consensus conditional is the x1-averaged one; the returned
    violation is the largest absolute gap between the joint table and its
    reconstruction p(y|x1,x2) * consensus(y2|y,x2).
    """
    t = ch.transition
    p_y = t.sum(axis=3)
    worst = 0.0
    for j in range(t.shape[1]):
        for k in range(t.shape[2]):
            mass = p_y[:, j, k]
            total = mass.sum()
            if total == 0.0:
                continue
            consensus = t[:, j, k, :].sum(axis=0) / total
            recon = np.outer(mass, consensus)
            worst = max(worst, float(np.max(np.abs(t[:, j, k, :] - recon))))
    return DegradednessResult(worst <= tol, worst)


@dataclass(frozen=True)
class GaussianGmac:
    """Gaussian channel block: powers P1, P2 and noise variances N < N2.

    y = x1 + x2 + z with z ~ N(0, N); the second user observes
    y2 = x1 + x2 + z2 with z2 ~ N(0, N2).
    """

    p1: float
    p2: float
    n: float
    n2: float

    def __post_init__(self) -> None:
        if self.p1 < 0.0 or self.p2 < 0.0:
            raise ValueError(f"powers must be nonnegative, got P1={self.p1}, P2={self.p2}")
        if self.n <= 0.0:
            raise ValueError(f"destination noise variance N must be positive, got {self.n}")
        if self.n2 <= self.n:
            raise ValueError(
                f"tap noise variance N2 must exceed N, got N={self.n}, N2={self.n2}"
            )


@dataclass(frozen=True)
class DegradedGaussianEquivalent:
    """Same-marginal degraded model: y2 = y + z' with z' ~ N(0, N2 - N)."""

    p1: float
    p2: float
    direct_noise: float
    extra_tap_noise: float

    @property
    def tap_noise(self) -> float:
        return self.direct_noise + self.extra_tap_noise


def degraded_equivalent(g: GaussianGmac) -> DegradedGaussianEquivalent:
    """Split the second receiver's noise into the destination noise plus an
    independent N2 - N remainder, which leaves both output marginals intact."""
    return DegradedGaussianEquivalent(g.p1, g.p2, g.n, g.n2 - g.n)


def marginal_match_gap(g: GaussianGmac) -> float:
    """Largest discrepancy between the (mean, variance) pairs of the two
    outputs under the original and the degraded parameter blocks."""
    d = degraded_equivalent(g)
    gaps = (
        abs(d.direct_noise - g.n),
        abs(d.tap_noise - g.n2),
        abs((d.p1 + d.p2) - (g.p1 + g.p2)),
    )
    return max(gaps)
