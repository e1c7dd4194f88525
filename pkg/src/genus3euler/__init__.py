"""Exact Euler characteristics of symplectic local systems on M3, H3 and A3."""

from .a3 import A3Breakdown, Providers, default_providers, euler_a111, euler_a3, euler_kunneth
from .branching import restrict_sp4_sp2, restrict_wreath
from .exactnum import Cyclotomic
from .lowgenus import CoverageError, H3Provider, M2Provider, bootstrap_m2, euler_a1, h3_lookup
from .matgroup import EigenvalueSystem, eigenvalues_h1, generate_group
from .strata import euler_m3, euler_m3_nonhyp, euler_m3_nonhyp_general, invariant_vector
from .symplectic import Partition, dimension, invariant_dimension, symplectic_character

__all__ = [
    "A3Breakdown", "CoverageError", "Cyclotomic", "EigenvalueSystem", "H3Provider",
    "M2Provider", "Partition", "Providers", "bootstrap_m2", "default_providers",
    "dimension", "eigenvalues_h1", "euler_a1", "euler_a111", "euler_a3", "euler_kunneth",
    "euler_m3", "euler_m3_nonhyp", "euler_m3_nonhyp_general", "generate_group",
    "h3_lookup", "invariant_dimension", "invariant_vector", "restrict_sp4_sp2",
    "restrict_wreath", "symplectic_character",
]
