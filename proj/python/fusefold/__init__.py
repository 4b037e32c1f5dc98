"""Re-rank candidate protein-fragment backbones by fusing a physics-derived
energy with statistical structural priors."""

from fusefold._core import *  # noqa: F401,F403
from fusefold._core import __doc__  # noqa: F401

__version__ = "0.1.0"
