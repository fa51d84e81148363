"""Double Fourier series summability on the torus."""

from ._torusfs import *  # noqa: F401,F403
from ._torusfs import __version__  # noqa: F401
