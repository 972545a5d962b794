#!/usr/bin/env python
"""Exception types raised by griesskit."""


class InvalidParameterError(ValueError):
    """A parameter (n, m, a Kac label, an index pair, a dimension) is out of range."""


class DegenerateSpectrumError(InvalidParameterError):
    """The Matsuo parameter alpha collides with the eigenvalues 0 or 2."""


class SizeLimitError(InvalidParameterError):
    """A closure or enumeration would exceed the desk-scale bound."""


class UnsupportedShapeError(ValueError):
    """A vertex-operator request the normal-ordering engine does not handle."""


class ConsistencyError(RuntimeError):
    """An exact identity that must hold by construction failed."""
