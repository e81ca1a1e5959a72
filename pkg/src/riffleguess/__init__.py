"""Exact computation, simulation and verification for the no-feedback
card guessing game after one riffle shuffle.

The package computes the exact distribution and moments of the number of
correct guesses, cross-checks them through independent routes (exhaustive
enumeration, lattice-path oracles, closed-form generating functions) and
quantifies convergence to the half-normal-sum limit law.
"""

from .errors import CapacityError
from .exactdist import (
    f_poly,
    factorial_moments,
    g_poly,
    pmf_x,
    pmf_y,
    pmf_y_float,
    raw_moments,
)
from .genfunc import (
    catalan_series,
    fixed_difference_gf,
    singular_coefficient_asymptotics,
    tilde_G_series,
    tilde_g_series,
)
from .limitlaw import (
    LIMIT_LAW,
    LimitLaw,
    LinExpLaw,
    half_normal_moment,
    limit_cdf,
    limit_density,
    limit_moment,
    linexp_cdf,
    moment_asymptotic_main_term,
)
from .montecarlo import SimulationReport, ks_distance, simulate
from .paths import shift_relation_check, w_oracle_pmf, y_oracle_pmf
from .pmf import ExactPmf
from .qpoly import QPolynomial
from .shuffle import ShuffleOutcome, cut_pmf, enumerate_shuffles, sample_shuffle
from .strategy import GuessSequence, TransitionMatrix, optimal_strategy, score, transition_prob

__all__ = [
    "CapacityError",
    "ExactPmf",
    "GuessSequence",
    "LIMIT_LAW",
    "LimitLaw",
    "LinExpLaw",
    "QPolynomial",
    "ShuffleOutcome",
    "SimulationReport",
    "TransitionMatrix",
    "catalan_series",
    "cut_pmf",
    "enumerate_shuffles",
    "f_poly",
    "factorial_moments",
    "fixed_difference_gf",
    "g_poly",
    "half_normal_moment",
    "ks_distance",
    "limit_cdf",
    "limit_density",
    "limit_moment",
    "linexp_cdf",
    "moment_asymptotic_main_term",
    "optimal_strategy",
    "pmf_x",
    "pmf_y",
    "pmf_y_float",
    "raw_moments",
    "sample_shuffle",
    "score",
    "shift_relation_check",
    "simulate",
    "singular_coefficient_asymptotics",
    "tilde_G_series",
    "tilde_g_series",
    "transition_prob",
    "w_oracle_pmf",
    "y_oracle_pmf",
]

__version__ = "0.1.0"
