"""
Exact Griess algebra toolkit

minimal submodule
Virasoro minimal models: central charges, Kac table, fusion rules
"""

from .minimal_model import (KacLabel, ModuleClass, central_charge, conformal_weight, top_weight,
                            kac_reflection, module_class, weight, kac_labels, kac_table,
                            is_admissible, fusion_dim, fusion_table)
