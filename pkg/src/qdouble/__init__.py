"""qdouble: numerical verification of quantum dilogarithm / double identities."""

from .params import ModularParam, DEFAULT_B_VALUES
from . import errors

__all__ = ["ModularParam", "DEFAULT_B_VALUES", "errors"]
__version__ = "0.1.0"
