"""
Exact Griess algebra toolkit

linalg submodule
Exact vector and matrix routines over the rationals
"""

from .exact import *
