"""
Exact Griess algebra toolkit

lattice submodule
Fock space and vertex operator modes of the lattice vertex algebra V_L, L = Z^n with Gram matrix 2I,
and the Ising vectors realizing the Griess relations inside it
"""

from .fock import (LatticeVector, FockMonomial, VOAState, WeightCap, DEFAULT_WEIGHT_CAP, pairing,
                   heisenberg_apply, zero_mode, mode, weight, homogeneous_components, component, truncate)
from .vertex import exp_vertex_mode, quadratic_mode, linear_mode, mode_product
from .realization import (ising_vector, ising_family, ma2_conformal, tilde_vector, tilde_family,
                          verify_relations, sl2_generators, commutant_check, extract_structure_constants,
                          compare_with_abstract)
