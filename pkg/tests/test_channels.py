import numpy as np
import pytest

from gmac_secrecy.channels import (
    DegradedGaussianEquivalent,
    FiniteGmac,
    GaussianGmac,
    build_binary_gmac,
    build_deterministic_example,
    degraded_equivalent,
    is_degraded,
    marginal_match_gap,
    marginals,
)


def test_deterministic_truth_table():
    ch = build_deterministic_example()
    # y = x1 * x2 and y2 = [x1 <= x2], both deterministic
    for i, x1 in enumerate(ch.alphabet_x1):
        for j, x2 in enumerate(ch.alphabet_x2):
            y = x1 * x2
            y2 = 1 if x1 <= x2 else 0
            k = ch.alphabet_y.index(y)
            l = ch.alphabet_y2.index(y2)
            assert ch.transition[i, j, k, l] == 1.0
            assert ch.transition[i, j].sum() == 1.0


@pytest.mark.parametrize("p", [0.0, 0.1, 0.2, 0.35, 0.5])
def test_binary_gmac_tap_statistics(p):
    ch = build_binary_gmac(p)
    for i in (0, 1):
        for j in (0, 1):
            y = i * j
            # the destination output is the clean product
            assert ch.transition[i, j, :, :].sum(axis=1)[y] == pytest.approx(1.0)
            # the tap sees the product through a crossover of probability p
            p_y2 = ch.transition[i, j].sum(axis=0)
            assert p_y2[y ^ 1] == pytest.approx(p, abs=1e-15)
            assert p_y2[y] == pytest.approx(1.0 - p, abs=1e-15)


@pytest.mark.parametrize("p", [-0.01, 0.51, 1.0])
def test_binary_gmac_rejects_bad_crossover(p):
    with pytest.raises(ValueError):
        build_binary_gmac(p)


@pytest.mark.parametrize("p", [0.0, 0.1, 0.25, 0.5])
def test_binary_gmac_is_degraded(p):
    res = is_degraded(build_binary_gmac(p))
    assert res.is_degraded
    assert res.max_violation <= 1e-12


def test_deterministic_example_not_degraded():
    res = is_degraded(build_deterministic_example())
    assert not res.is_degraded
    assert res.max_violation == pytest.approx(0.5, abs=1e-12)


def test_marginals_shapes_and_rowsums():
    ch = build_binary_gmac(0.2)
    m = marginals(ch)
    assert m.p_y.shape == (2, 2, 2)
    assert m.p_y2.shape == (2, 2, 2)
    assert np.allclose(m.p_y.sum(axis=-1), 1.0)
    assert np.allclose(m.p_y2.sum(axis=-1), 1.0)
    # tap marginal of inputs (1, 1): product is 1, flipped with probability 0.2
    assert m.p_y2[1, 1, 0] == pytest.approx(0.2)
    assert m.p_y2[1, 1, 1] == pytest.approx(0.8)


def test_finite_gmac_rejects_bad_tables():
    ch = build_binary_gmac(0.2)
    bad = np.array(ch.transition)
    bad[0, 0, 0, 0] += 0.5
    with pytest.raises(ValueError):
        FiniteGmac(ch.alphabet_x1, ch.alphabet_x2, ch.alphabet_y, ch.alphabet_y2, bad)
    with pytest.raises(ValueError):
        FiniteGmac((0, 0), (0, 1), (0, 1), (0, 1), np.array(ch.transition))


def test_finite_gmac_json_round_trip():
    for ch in (build_deterministic_example(), build_binary_gmac(0.3)):
        d = ch.to_dict()
        back = FiniteGmac.from_dict(d)
        assert back.to_dict() == d
        assert np.array_equal(back.transition, ch.transition)


def test_transition_is_read_only():
    ch = build_binary_gmac(0.2)
    with pytest.raises(ValueError):
        ch.transition[0, 0, 0, 0] = 0.3


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(p1=-1.0, p2=1.0, n=1.0, n2=2.0),
        dict(p1=1.0, p2=1.0, n=0.0, n2=2.0),
        dict(p1=1.0, p2=1.0, n=2.0, n2=2.0),
        dict(p1=1.0, p2=1.0, n=3.0, n2=2.0),
    ],
)
def test_gaussian_validation(kwargs):
    with pytest.raises(ValueError):
        GaussianGmac(**kwargs)


def test_gaussian_degraded_equivalent():
    g = GaussianGmac(1.0, 1.0, 1.0, 2.0)
    eq = degraded_equivalent(g)
    assert isinstance(eq, DegradedGaussianEquivalent)
    assert eq.direct_noise == pytest.approx(1.0)
    assert eq.extra_tap_noise == pytest.approx(1.0)
    assert eq.tap_noise == pytest.approx(g.n2)


@pytest.mark.parametrize(
    "preset",
    [(1.0, 1.0, 1.0, 2.0), (10.0, 10.0, 1.0, 31.62), (1.0, 4.0, 1.0, 4.0)],
)
def test_gaussian_marginal_match_gap_zero(preset):
    # the two-hop construction reproduces the tap marginal exactly
    assert marginal_match_gap(GaussianGmac(*preset)) <= 1e-12
