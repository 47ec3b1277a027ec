import math

import numpy as np
import pytest

from gmac_secrecy.channels import GaussianGmac, build_binary_gmac, build_deterministic_example
from gmac_secrecy.entropy import binary_entropy, binary_entropy_inv, star
from gmac_secrecy import bounds
from gmac_secrecy.bounds import (
    GridConfigError,
    InputDistribution,
    binary_achievability_distribution,
    binary_epi_scan,
    binary_epi_slack,
    gaussian_region_bounds,
    gaussian_region_bounds_closed_form,
    max_secrecy_rate_over_grid,
    region_bounds,
    star_entropy_convexity_gap,
)

B02 = build_binary_gmac(0.2)


def brute_force_bounds(ch, d):
    """Reference computation with plain dicts and floats, no numpy."""
    joint = {}
    for qi in range(d.n_q):
        wq = float(d.p_q[qi])
        for i in range(len(ch.alphabet_x1)):
            for j in range(len(ch.alphabet_x2)):
                for k in range(len(ch.alphabet_y)):
                    for l in range(len(ch.alphabet_y2)):
                        pr = (
                            wq
                            * float(d.p_x1_given_q[qi, i])
                            * float(d.p_x2_given_q[qi, j])
                            * float(ch.transition[i, j, k, l])
                        )
                        if pr > 0.0:
                            key = (qi, i, j, k, l)
                            joint[key] = joint.get(key, 0.0) + pr

    def ent(axes):
        marg = {}
        for key, pr in joint.items():
            sub = tuple(key[a] for a in axes)
            marg[sub] = marg.get(sub, 0.0) + pr
        return -sum(pr * math.log2(pr) for pr in marg.values())

    i1 = ent((0, 1, 2)) + ent((0, 2, 3)) - ent((0, 1, 2, 3)) - ent((0, 2))
    i2 = ent((0, 1, 2)) + ent((0, 2, 4)) - ent((0, 1, 2, 4)) - ent((0, 2))
    isum = ent((1, 2)) + ent((3,)) - ent((1, 2, 3))
    return (i1, isum, max(0.0, i1 - i2), max(0.0, isum - i2))


@pytest.mark.parametrize("alpha", [0.0, 0.1, 0.3, 0.5])
@pytest.mark.parametrize("p", [0.1, 0.2, 0.3])
def test_binary_achievability_matches_closed_forms(p, alpha):
    ch = build_binary_gmac(p)
    got = region_bounds(ch, binary_achievability_distribution(alpha))
    hp, ha = binary_entropy(p), binary_entropy(alpha)
    hpa = binary_entropy(star(p, alpha))
    assert got.r1_max == pytest.approx(ha, abs=1e-10)
    assert got.sum_max == pytest.approx(1.0, abs=1e-10)
    assert got.re_max == pytest.approx(ha + hp - hpa, abs=1e-10)
    assert got.r0_plus_re_max == pytest.approx(1.0 + hp - hpa, abs=1e-10)


@pytest.mark.parametrize(
    "dist",
    [
        binary_achievability_distribution(0.3),
        InputDistribution(
            np.array([0.25, 0.75]),
            np.array([[0.9, 0.1], [0.4, 0.6]]),
            np.array([[0.2, 0.8], [0.7, 0.3]]),
        ),
        InputDistribution(
            np.array([1.0]), np.array([[0.35, 0.65]]), np.array([[0.5, 0.5]])
        ),
    ],
)
def test_region_bounds_agree_with_brute_force(dist):
    got = region_bounds(B02, dist)
    want = brute_force_bounds(B02, dist)
    for a, b in zip(got, want):
        assert a == pytest.approx(b, abs=1e-12)


def test_region_bounds_internal_ordering():
    got = region_bounds(B02, binary_achievability_distribution(0.2))
    assert 0.0 <= got.re_max <= got.r1_max + 1e-12
    assert got.r0_plus_re_max <= got.sum_max + 1e-12


def test_region_bounds_warns_on_non_degraded_channel():
    det = build_deterministic_example()
    d = binary_achievability_distribution(0.3)
    with pytest.warns(UserWarning):
        region_bounds(det, d)
    # and the escape hatch is silent
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("error")
        region_bounds(det, d, check_degraded=False)


def test_region_bounds_shape_mismatch():
    d = InputDistribution(
        np.array([1.0]), np.array([[0.2, 0.3, 0.5]]), np.array([[0.5, 0.5]])
    )
    with pytest.raises(ValueError):
        region_bounds(B02, d)


def test_input_distribution_validation():
    with pytest.raises(ValueError):
        InputDistribution(np.array([0.6, 0.6]), np.eye(2), np.eye(2))
    with pytest.raises(ValueError):
        InputDistribution(np.array([0.5, 0.5]), -np.eye(2), np.eye(2))
    with pytest.raises(ValueError):
        InputDistribution(np.array([np.nan, 1.0]), np.eye(2), np.eye(2))
    d = binary_achievability_distribution(0.25)
    with pytest.raises(ValueError):
        d.p_q[0] = 0.7


def test_achievability_distribution_structure():
    d = binary_achievability_distribution(0.3)
    assert np.allclose(d.p_q, [0.5, 0.5])
    assert np.allclose(d.p_x2_given_q, [[0.0, 1.0], [0.0, 1.0]])
    assert np.allclose(d.p_x1_given_q, [[0.7, 0.3], [0.3, 0.7]])


def test_grid_search_deterministic_channel_full_rate():
    det = build_deterministic_example()
    with pytest.warns(UserWarning):
        val, dist = max_secrecy_rate_over_grid(det, 0.0, grid_step=1.0 / 8.0)
    assert val == pytest.approx(1.0, abs=1e-9)


def test_grid_search_binary_zero_common_rate():
    # alpha = 1/2 sits on the coarse grid, so the full h(p) is reachable
    val, dist = max_secrecy_rate_over_grid(B02, 0.0, grid_step=1.0 / 8.0)
    assert val == pytest.approx(binary_entropy(0.2), abs=1e-9)
    got = region_bounds(B02, dist)
    assert min(got.re_max, got.r1_max, got.sum_max) == pytest.approx(val, abs=1e-12)


def test_grid_search_refinement_only_improves():
    raw, _ = max_secrecy_rate_over_grid(B02, 0.3, grid_step=1.0 / 8.0, refine=False)
    ref, _ = max_secrecy_rate_over_grid(B02, 0.3, grid_step=1.0 / 8.0)
    assert ref >= raw - 1e-15


def test_grid_search_single_q_letter():
    val, dist = max_secrecy_rate_over_grid(B02, 0.0, grid_step=1.0 / 8.0, n_q=1)
    assert dist.n_q == 1
    assert val == pytest.approx(binary_entropy(0.2), abs=1e-9)


def test_grid_search_rejects_bad_requests():
    with pytest.raises(ValueError):
        max_secrecy_rate_over_grid(B02, -0.1)
    with pytest.raises(GridConfigError):
        max_secrecy_rate_over_grid(B02, 0.0, grid_step=0.3)
    with pytest.raises(GridConfigError):
        max_secrecy_rate_over_grid(B02, 0.0, n_q=9)
    with pytest.raises(GridConfigError):
        max_secrecy_rate_over_grid(B02, 0.0, grid_step=1.0 / 32.0, n_q=3)


GAUSS_PRESETS = [
    (1.0, 1.0, 1.0, 2.0),
    (10.0, 10.0, 1.0, 31.62),
    (1.0, 4.0, 1.0, 4.0),
    (1.0, 0.0, 1.0, 2.0),
]


@pytest.mark.parametrize("preset", GAUSS_PRESETS)
def test_gaussian_covariance_path_matches_closed_forms(preset):
    g = GaussianGmac(*preset)
    for k in range(0, 101, 5):
        alpha = k / 100.0
        got = gaussian_region_bounds(g, alpha)
        want = gaussian_region_bounds_closed_form(g, alpha)
        for a, b in zip(got, want):
            assert a == pytest.approx(b, abs=1e-9)


def test_gaussian_bounds_alpha_domain():
    g = GaussianGmac(1.0, 1.0, 1.0, 2.0)
    with pytest.raises(ValueError):
        gaussian_region_bounds(g, -0.01)
    with pytest.raises(ValueError):
        gaussian_region_bounds(g, 1.01)


@pytest.mark.parametrize("rho", [0.1, 0.2, 0.3, 0.45])
def test_star_entropy_composition_strictly_convex(rho):
    assert star_entropy_convexity_gap(rho) > 0.0


def test_star_entropy_composition_flat_at_half():
    # at rho = 1/2 the composition is identically 1, so the gap vanishes
    assert star_entropy_convexity_gap(0.5) == pytest.approx(0.0, abs=1e-12)


def test_star_entropy_convexity_domain():
    with pytest.raises(ValueError):
        star_entropy_convexity_gap(0.0)
    with pytest.raises(ValueError):
        star_entropy_convexity_gap(0.6)


def test_epi_slack_zero_for_product_inputs():
    for n, v in ((1, 0.5), (2, 0.5), (2, 0.25)):
        x = binary_entropy_inv(v)
        single = np.array([1.0 - x, x])
        probs = single.copy()
        for _ in range(n - 1):
            probs = np.outer(probs, single).ravel()
        assert binary_epi_slack(probs, 0.2, v) == pytest.approx(0.0, abs=1e-12)


def test_epi_slack_positive_for_correlated_input():
    # fully correlated pair with H = 0.5 bits, so the premise asks v = 0.25
    x = binary_entropy_inv(0.5)
    probs = np.array([1.0 - x, 0.0, 0.0, x])
    assert binary_epi_slack(probs, 0.2, 0.25) > 0.01


def test_epi_slack_validation():
    with pytest.raises(ValueError):
        binary_epi_slack(np.array([0.5, 0.25, 0.25]), 0.2, 0.5)
    with pytest.raises(ValueError):
        binary_epi_slack(np.array([0.7, 0.3]), 0.0, 0.5)
    with pytest.raises(ValueError):
        binary_epi_slack(np.array([0.7, 0.3]), 0.2, 1.5)


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("p0", [0.1, 0.3])
def test_epi_scan_bound_holds(n, p0):
    report = binary_epi_scan(n, p0, 0.5)
    assert report.holds
    assert report.min_slack >= -1e-9
    assert report.feasible_count > 0
    for case in report.equality_cases:
        assert case.matches_equality_condition


def test_epi_scan_equality_only_at_full_entropy():
    report = binary_epi_scan(2, 0.2, 1.0)
    # only the uniform law has H = 2n bits, and it is an equality case
    assert report.feasible_count == 1
    assert len(report.equality_cases) == 1
    case = report.equality_cases[0]
    assert case.matches_equality_condition
    assert case.symbol_entropies == pytest.approx([1.0, 1.0], abs=1e-12)


def test_epi_scan_rejects_large_blocks():
    with pytest.raises(GridConfigError):
        binary_epi_scan(4, 0.2, 0.5)


def test_epi_scan_three_symbol_block_runs_on_coarse_grid():
    report = binary_epi_scan(3, 0.2, 0.5, grid_step=0.25)
    assert report.holds
    assert report.min_slack >= -1e-9
