"""Exact phase-space toolkit for two bilinearly coupled harmonic oscillators.

Spectrum, Wigner functions, moments, marginal purity / linear entropy,
approximate Schmidt weights, and directional quantum-steering
quantifiers, each cross-validated against independent quadrature and SVD
oracles.
"""

from .model import (
    NormalModes,
    QuantumNumbers,
    SystemParams,
    cutoff_angle,
    diagonalize,
    energy,
)
from .moments import (
    ExcitationNumbers,
    LadderMoments,
    MomentSet,
    excitation_numbers,
    ladder_moments,
    second_and_fourth_moments,
    uncertainty_areas,
)
from .oracle import (
    QuadratureRule,
    SchmidtOracleResult,
    VerificationReport,
    gauss_hermite,
    global_purity_check,
    moment_oracle,
    run_verification,
    schmidt_oracle,
)
from .purity import (
    PurityResult,
    SchmidtSpectrum,
    entropy_gap,
    makarov_entropy,
    makarov_schmidt,
    purity_exact,
    purity_ground_closed,
)
from .steering import (
    SteeringResult,
    selection_rules,
    steering,
    steering_weak_general,
)
from .wigner import (
    PhasePoint,
    RotatedPhasePoint,
    eigenfunction,
    lab_to_normal,
    normal_to_lab,
    wigner_lab,
    wigner_rotated,
)

__version__ = "1.0.0"

__all__ = [
    "SystemParams", "QuantumNumbers", "NormalModes",
    "diagonalize", "cutoff_angle", "energy",
    "MomentSet", "ExcitationNumbers", "LadderMoments",
    "second_and_fourth_moments", "uncertainty_areas",
    "excitation_numbers", "ladder_moments",
    "PurityResult", "SchmidtSpectrum",
    "purity_exact", "purity_ground_closed",
    "makarov_schmidt", "makarov_entropy", "entropy_gap",
    "SteeringResult", "steering", "steering_weak_general", "selection_rules",
    "PhasePoint", "RotatedPhasePoint",
    "eigenfunction", "wigner_rotated", "wigner_lab",
    "lab_to_normal", "normal_to_lab",
    "QuadratureRule", "SchmidtOracleResult", "VerificationReport",
    "gauss_hermite", "moment_oracle", "schmidt_oracle",
    "global_purity_check", "run_verification",
]
