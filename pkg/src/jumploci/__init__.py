"""Exact computation of cohomology jump loci of 3-manifolds and link complements."""

__version__ = "0.1.0"

from .symbolic import BudgetExceeded, LaurentPoly, parse_poly
from .ideals.varieties import VarietyDescription, varieties_equal, variety_in
from .cdga import FiniteCDGA, resonance
from .groups import GroupPresentation, alexander_polynomial, char_variety_deg1
from .threeman import ClosedThreeManifoldData, TriForm, char_variety_3m, resonance_3m
from .links import LinkData, link_char_variety, link_resonance
from .constructors import ArrangementIncidence, TreeGraphManifold, boundary_manifold
from .verdicts import Verdict, link_verdict, manifold_verdict, tangent_cone_compare
from .fixtures import load, load_fixture

__all__ = [
    "ArrangementIncidence", "BudgetExceeded", "ClosedThreeManifoldData", "FiniteCDGA",
    "GroupPresentation", "LaurentPoly", "LinkData", "TreeGraphManifold", "TriForm",
    "VarietyDescription", "Verdict", "alexander_polynomial", "boundary_manifold",
    "char_variety_3m", "char_variety_deg1", "link_char_variety", "link_resonance",
    "link_verdict", "load", "load_fixture", "manifold_verdict", "parse_poly", "resonance",
    "resonance_3m", "tangent_cone_compare", "varieties_equal", "variety_in",
]
