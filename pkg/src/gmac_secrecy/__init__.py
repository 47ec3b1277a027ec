"""Secrecy rate regions for two-user multiple access channels with an
untrusted second receiver.

The library computes closed-form capacity-equivocation boundaries for a
deterministic example, a binary multiplying channel with a noisy tap, and
a Gaussian model; checks achievability laws against those closed forms;
searches input-distribution grids; and evaluates explicit finite-length
codebooks exactly.
"""

from .bounds import (
    EpiEqualityCase,
    EpiScanReport,
    GridConfigError,
    InputDistribution,
    RegionBounds,
    binary_achievability_distribution,
    binary_epi_scan,
    binary_epi_slack,
    gaussian_region_bounds,
    gaussian_region_bounds_closed_form,
    max_secrecy_rate_over_grid,
    region_bounds,
    star_entropy_convexity_gap,
)
from .channels import (
    DegradednessResult,
    DegradedGaussianEquivalent,
    FiniteGmac,
    GaussianGmac,
    MarginalPair,
    build_binary_gmac,
    build_deterministic_example,
    degraded_equivalent,
    is_degraded,
    marginal_match_gap,
    marginals,
)
from .entropy import binary_entropy, binary_entropy_inv, gauss_rate, star
from .oracle import (
    Codebook,
    EnumerationLimitError,
    OracleReport,
    concatenate_codes,
    corner_common_code,
    corner_secrecy_code,
    evaluate,
    random_superposition_code,
    repeat_code,
)
from .regions import (
    CurvePoint,
    RateTriple,
    RegionCurve,
    binary_region_member,
    binary_secrecy_capacity,
    binary_secrecy_curve,
    deterministic_region_member,
    deterministic_secrecy_curve,
    gaussian_flat_knee,
    gaussian_mac_capacity,
    gaussian_mac_curve,
    gaussian_region_member,
    gaussian_secrecy_capacity,
    gaussian_secrecy_curve,
    max_gaussian_sum_rate,
    save_curve_csv,
    sweep_secrecy_curve,
    time_sharing_curve,
    write_curve_csv,
)

__version__ = "0.1.0"

__all__ = [
    "Codebook",
    "CurvePoint",
    "DegradednessResult",
    "DegradedGaussianEquivalent",
    "EnumerationLimitError",
    "EpiEqualityCase",
    "EpiScanReport",
    "FiniteGmac",
    "GaussianGmac",
    "GridConfigError",
    "InputDistribution",
    "MarginalPair",
    "OracleReport",
    "RateTriple",
    "RegionBounds",
    "RegionCurve",
    "binary_achievability_distribution",
    "binary_entropy",
    "binary_entropy_inv",
    "binary_epi_scan",
    "binary_epi_slack",
    "binary_region_member",
    "binary_secrecy_capacity",
    "binary_secrecy_curve",
    "build_binary_gmac",
    "build_deterministic_example",
    "concatenate_codes",
    "corner_common_code",
    "corner_secrecy_code",
    "degraded_equivalent",
    "deterministic_region_member",
    "deterministic_secrecy_curve",
    "evaluate",
    "gauss_rate",
    "gaussian_flat_knee",
    "gaussian_mac_capacity",
    "gaussian_mac_curve",
    "gaussian_region_bounds",
    "gaussian_region_bounds_closed_form",
    "gaussian_region_member",
    "gaussian_secrecy_capacity",
    "gaussian_secrecy_curve",
    "is_degraded",
    "marginal_match_gap",
    "marginals",
    "max_gaussian_sum_rate",
    "max_secrecy_rate_over_grid",
    "random_superposition_code",
    "region_bounds",
    "repeat_code",
    "save_curve_csv",
    "star",
    "star_entropy_convexity_gap",
    "sweep_secrecy_curve",
    "time_sharing_curve",
    "write_curve_csv",
]
