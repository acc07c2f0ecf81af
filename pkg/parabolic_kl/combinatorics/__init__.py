"""Paths, binary strings, link patterns and coset representatives."""

from parabolic_kl.combinatorics.paths import BinaryString, LinkPattern, PathNK, all_paths
from parabolic_kl.combinatorics.cosets import Tableau, grassmannian, longest_representative

__all__ = ["BinaryString", "LinkPattern", "PathNK", "all_paths", "Tableau", "grassmannian", "longest_representative"]
