"""Gaussian simulator and closed-form sensitivities for truncated SU(1,1)
sensor networks.  Everything lives in the compiled core module."""

from ._core import *  # noqa: F401,F403

__version__ = "0.1.0"
