"""Exact-arithmetic toolkit for finite invariant laminations of the unit circle."""

from ._lamina import *  # noqa: F401,F403
from ._lamina import __all__  # noqa: F401
