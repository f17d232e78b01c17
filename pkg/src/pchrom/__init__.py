"""Spectral lower bounds on chromatic-number-like parameters from signed p-energies."""

from .bounds import (
    INFINITY,
    BoundReport,
    OptimizerConfig,
    ando_lin_bound,
    bound_report,
    f_bound,
    hoffman_bound,
    inertia_bound,
    optimize_f,
    sum_bound,
)
from .eigen import Spectrum, inertia, spectrum
from .errors import *  # noqa: F401,F403
from .exact import ExactInvariants, chromatic_number, clique_number, conclude_quantum
from .graphio import Graph, named_graph, parse_edgelist, parse_graph6, write_graph6
from .penergy import LimitCoefficients, PEnergyPair, limit_coefficients, p_energy, ratio_H

__version__ = "0.1.0"
