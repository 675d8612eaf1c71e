"""Tropical CSM cycles of matroids, Bergman fans, and a tropical Noether formula checker."""

from .bergman import bergman_fan, bergman_structure, parallel_connection_map, support_contains
from .cones import Cone
from .csm import (csm_cycle, csm_total, gl_invariance, product_check, psi_polynomial,
                  psi_weight, weight_ledger)
from .fan import (PolyhedralCycle, WeightedFan, cycles_equal, degree0, fp_dimension, is_balanced,
                  recession_cycle, stable_intersection, star_fan)
from .matroid import (Matroid, beta_invariant, characteristic_polynomial, fano, free,
                      from_bases, graphic, non_fano, parallel_connection, uniform)
from .noether import cube, dual_census_check, hull, noether_check, simplex, staircase
from .polynomial import Polynomial

__version__ = "0.1.0"

__all__ = [
    "Cone", "Matroid", "Polynomial", "PolyhedralCycle", "WeightedFan",
    "bergman_fan", "bergman_structure", "beta_invariant", "characteristic_polynomial",
    "csm_cycle", "csm_total", "cube", "cycles_equal", "degree0", "dual_census_check", "fano",
    "fp_dimension", "free", "from_bases", "gl_invariance", "graphic", "hull", "is_balanced",
    "noether_check", "non_fano", "parallel_connection", "parallel_connection_map",
    "product_check", "psi_polynomial", "psi_weight", "recession_cycle", "simplex", "staircase",
    "stable_intersection", "star_fan", "support_contains", "uniform", "weight_ledger",
]
