"""Determinantal ideals, varieties and tangent cones."""
from .matrices import (Ideal, PolyMatrix, block_minors_ideal, det, fitting_ideal, minors,
                       minors_ideal, order_of_module, pfaffian, pfaffian_ideal, pfaffians)
from .modp import ModPResult, varieties_equal_mod_p, variety_in_mod_p
from .tangent import (exponential_tangent_cone, exponential_tangent_cone_union,
                      tangent_cone_hypersurface, tangent_cone_union)
from .varieties import (AFFINE, TORUS, FullAmbient, Hypersurface, IdentityPoint,
                        LinearSubspace, TorsionTranslate, VarietyDescription, ZeroSet,
                        describe, intersect, subspace_in_variety, varieties_equal, variety_in)
