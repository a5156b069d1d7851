"""Exact line arrangements from torsion on plane cubics, and the operators acting on them."""
from .arrangement import Arrangement
from .errors import PolylabError
from .matroid import build_Mn, verify_realization
from .projective import ProjLine, ProjPoint
from .scalar import Field

__all__ = ["Arrangement", "Field", "PolylabError", "ProjLine", "ProjPoint", "build_Mn", "verify_realization"]
__version__ = "0.1.0"
