"""Laurent polynomials and the Hecke algebra and module computations."""

from parabolic_kl.algebra.laurent import LaurentPoly, parse_poly
from parabolic_kl.algebra.hecke_module import ModuleElement, kl_basis, parabolic_kl

__all__ = ["LaurentPoly", "parse_poly", "ModuleElement", "kl_basis", "parabolic_kl"]
