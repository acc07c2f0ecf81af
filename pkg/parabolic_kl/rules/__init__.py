"""Combinatorial rules: Dyck strip tilings, LS trees and linkages."""

from parabolic_kl.rules.dyck import StripConfig, enumerate_configurations, q_polynomial
from parabolic_kl.rules.ls_tree import CapTree, Labelling, build_tree, ls_polynomial
from parabolic_kl.rules.linkage import Linkage, all_linkages

__all__ = [
    "StripConfig",
    "enumerate_configurations",
    "q_polynomial",
    "CapTree",
    "Labelling",
    "build_tree",
    "ls_polynomial",
    "Linkage",
    "all_linkages",
]
