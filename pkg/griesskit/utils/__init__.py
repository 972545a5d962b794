"""
Exact Griess algebra toolkit

utils submodule
Serialization of exact values and report writers
"""

from .utils import *
