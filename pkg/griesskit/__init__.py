"""
Exact Griess algebra toolkit
"""
name = "griesskit"
