"""Large sieve laboratory: exact sieve constants on finite instances.

Thin wrapper over the compiled core; exact rationals cross the boundary as
"p/q" strings (use fractions.Fraction to consume them).
"""

from sievelab._core import *  # noqa: F401,F403
from sievelab._core import __version__  # noqa: F401
