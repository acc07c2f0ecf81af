"""
parabolic-kl - Kazhdan-Lusztig polynomials of maximal parabolic quotients of S_N.
"""

__version__ = "1.0.0"
__author__ = "parabolic-kl developers"

from parabolic_kl.cli import KLCalculator

__all__ = ["KLCalculator"]
