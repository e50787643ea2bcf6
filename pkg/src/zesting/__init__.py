"""Exact zesting of braided fusion categories from skeletal data."""

from .cyclotomic import CycNum, root_of_unity, cyc
from .cohomology import FinAbGroup, CoeffModule, Cochain, Character
from .category import (CategoryData, Report, validate, central_charge, global_dimension, is_modular,
                       mueger_center, chi_scalar)
from .engine import (ZestingError, ObstructionError, UnsupportedError, AssocZesting, BraidedZesting,
                     RibbonZesting, associative_zestings, partial_obstructions, solve_braided,
                     solve_ribbon, check_associative, check_braided, check_twist, check_ribbon,
                     zested_modular_data, zested_category, zested_mueger_center)
from .cyclic import CyclicContext, cyclic_modular_data, fermionic_z2_zestings, summary
from . import gallery

__version__ = "0.1.0"

__all__ = [
    "CycNum", "root_of_unity", "cyc",
    "FinAbGroup", "CoeffModule", "Cochain", "Character",
    "CategoryData", "Report", "validate", "central_charge", "global_dimension", "is_modular",
    "mueger_center", "chi_scalar",
    "ZestingError", "ObstructionError", "UnsupportedError",
    "AssocZesting", "BraidedZesting", "RibbonZesting",
    "associative_zestings", "partial_obstructions", "solve_braided", "solve_ribbon",
    "check_associative", "check_braided", "check_twist", "check_ribbon",
    "zested_modular_data", "zested_category", "zested_mueger_center",
    "CyclicContext", "cyclic_modular_data", "fermionic_z2_zestings", "summary",
    "gallery", "__version__",
]
