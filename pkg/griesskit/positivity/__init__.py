"""
Exact Griess algebra toolkit

positivity submodule
Exact positive-definiteness classification of the invariant form on V_2
"""

from .gram import (GramReport, gram_matrix, is_positive_definite, B_matrix, C_matrix,
                   B_matrix_from_form, C_matrix_from_form, detB_closed, detC_closed, classify,
                   decomposition_basis, decomposition_spans, mixed_blocks_vanish, block_verdict,
                   gram_report)
