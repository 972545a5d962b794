"""
Exact Griess algebra toolkit

griess submodule
The weight-2 Griess algebra spanned by Virasoro vectors, and its Miyamoto involutions
"""

from .algebra import (PairIndex, GriessParams, GriessElement, LinearEndo, GriessAlgebra,
                      pair_index, all_pairs, build, build_general)
from .automorphisms import (identity, compose, is_involution, permutation_endo, miyamoto,
                            sign_on_eigenspaces, is_automorphism, generated_group_order, group_order,
                            miyamoto_relations)
