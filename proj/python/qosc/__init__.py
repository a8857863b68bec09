"""Finite q-oscillator toolkit.

su_q(2) operator matrices, dual q-Kravchuk wavefunctions on the non-uniform
sensor grid, the fractional Fourier-q-Kravchuk transform, equivalent
potentials, and large-j contraction diagnostics.
"""

try:
    from ._qosc import *  # noqa: F401,F403
    from ._qosc import __doc__ as _core_doc  # noqa: F401
except ImportError:  # development tree: extension on PYTHONPATH, not installed
    from _qosc import *  # noqa: F401,F403

__version__ = "0.1.0"
