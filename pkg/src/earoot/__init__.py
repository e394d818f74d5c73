"""Extended affine root systems, character fixed points and quantum torus examples."""

from .cyclotomic import Cyclotomic
from .ears import EarsPresentation, IsoClass, Root, axioms_check, classify_isotropic, decompose
from .finroot import FiniteType, build_finite_roots, classify
from .fixpoint import (Character, FixedRootSystem, TheoremNotApplicable, decompose_fixed,
                       fixed_root_system, is_isolated_exact, isolated_bruteforce, sears_check)
from .lattice import RationalForm, Semilattice
from .qtorus import ExampleScenario, TorusPresentation, core_and_tameness, qtorus_report, roots_of_fixed
from .affine import affinize_report, twisted_fixed_points

__version__ = "0.1.0"

__all__ = [
    "Character", "Cyclotomic", "EarsPresentation", "ExampleScenario", "FiniteType", "FixedRootSystem",
    "IsoClass", "RationalForm", "Root", "Semilattice", "TheoremNotApplicable", "TorusPresentation",
    "affinize_report", "axioms_check", "build_finite_roots", "classify", "classify_isotropic",
    "core_and_tameness", "decompose", "decompose_fixed", "fixed_root_system", "is_isolated_exact",
    "isolated_bruteforce", "qtorus_report", "roots_of_fixed", "sears_check", "twisted_fixed_points",
]
