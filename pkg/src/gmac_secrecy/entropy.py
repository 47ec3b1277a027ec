"""Scalar primitives used everywhere else: binary entropy, its inverse on
[0, 1/2], the binary convolution, and the Gaussian channel rate term.
All entropies and rates are in bits."""

from __future__ import annotations

import math

__all__ = ["star", "binary_entropy", "binary_entropy_inv", "gauss_rate"]

# Bisection controls for binary_entropy_inv.
_INV_MAX_ITER = 200
_INV_WIDTH = 1e-14


def star(a: float, b: float) -> float:
    """Binary convolution a(1-b) + (1-a)b, the crossover of two cascaded flips."""
    return a * (1.0 - b) + (1.0 - a) * b


def binary_entropy(a: float) -> float:
    """Entropy in bits of a Bernoulli(a) variable, exactly 0 at a = 0 or 1."""
    if a == 0.0 or a == 1.0:
        return 0.0
    return -a * math.log2(a) - (1.0 - a) * math.log2(1.0 - a)


def binary_entropy_inv(c: float) -> float:
    """The unique a in [0, 1/2] with binary_entropy(a) = c.

    Bisection on [0, 1/2], where the entropy is strictly increasing. The
    endpoints 0 and 1 are returned exactly as 0 and 1/2.
    """
    if not 0.0 <= c <= 1.0:
        raise ValueError(f"entropy value must lie in [0, 1], got {c}")
    if c == 0.0:
        return 0.0
    if c == 1.0:
        return 0.5
    lo, hi = 0.0, 0.5
    for _ in range(_INV_MAX_ITER):
        if hi - lo <= _INV_WIDTH:
            break
        mid = 0.5 * (lo + hi)
        if binary_entropy(mid) < c:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def gauss_rate(signal: float, noise: float) -> float:
    """One Gaussian rate term, 0.5*log2(1 + signal/noise), in bits per use."""
    if noise <= 0.0:
        raise ValueError(f"noise power must be positive, got {noise}")
    if signal < 0.0:
        raise ValueError(f"signal power must be nonnegative, got {signal}")
    return 0.5 * math.log2(1.0 + signal / noise)
