"""Finite formal linear combinations with Laurent polynomial coefficients."""

from typing import Callable, Dict, Generic, Hashable, Iterator, List, Mapping, Optional, Tuple, TypeVar, Union

from parabolic_kl.algebra.laurent import LaurentPoly, ZERO
from parabolic_kl.utils.errors import KLError

Key = TypeVar("Key", bound=Hashable)
Coefficient = Union[int, LaurentPoly]


class LinearCombination(Generic[Key]):
    """
    A finitely supported map from basis keys to nonzero Laurent polynomials.

    Subclasses only add the data needed to keep keys compatible; all of the
    arithmetic lives here and always returns an instance of the same class.
    """

    def __init__(self, terms: Optional[Mapping[Key, Coefficient]] = None):
        cleaned: Dict[Key, LaurentPoly] = {}
        for key, coeff in (terms or {}).items():
            coeff = LaurentPoly._coerce(coeff)
            if not coeff.is_zero():
                cleaned[key] = coeff
        self.terms = cleaned

    def _new(self, terms: Mapping[Key, Coefficient]) -> "LinearCombination[Key]":
        return type(self)(terms)

    def coefficient(self, key: Key) -> LaurentPoly:
        return self.terms.get(key, ZERO)

    def support(self) -> List[Key]:
        return sorted(self.terms)

    def items(self) -> List[Tuple[Key, LaurentPoly]]:
        return sorted(self.terms.items())

    def __iter__(self) -> Iterator[Tuple[Key, LaurentPoly]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "LinearCombination[Key]") -> "LinearCombination[Key]":
        if not isinstance(other, LinearCombination):
            return NotImplemented
        result = dict(self.terms)
        for key, coeff in other.terms.items():
            result[key] = result.get(key, ZERO) + coeff
        return self._new(result)

    def __neg__(self) -> "LinearCombination[Key]":
        return self._new({key: -coeff for key, coeff in self.terms.items()})

    def __sub__(self, other: "LinearCombination[Key]") -> "LinearCombination[Key]":
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self + (-other)

    def scale(self, scalar: Coefficient) -> "LinearCombination[Key]":
        return self._new({key: coeff * scalar for key, coeff in self.terms.items()})

    def __mul__(self, scalar: Coefficient) -> "LinearCombination[Key]":
        if not isinstance(scalar, (int, LaurentPoly)):
            return NotImplemented
        return self.scale(scalar)

    __rmul__ = __mul__

    def map_coefficients(self, fn: Callable[[LaurentPoly], LaurentPoly]) -> "LinearCombination[Key]":
        return self._new({key: fn(coeff) for key, coeff in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        body = " + ".join(f"({coeff})*[{key}]" for key, coeff in self.items())
        return f"{type(self).__name__}({body or '0'})"


def bar_invariant_correction(start: LinearCombination[Key],
                             bar: Callable[[LinearCombination[Key]], LinearCombination[Key]],
                             rank: Callable[[Key], int],
                             canonical: Callable[[Key], LinearCombination[Key]]) -> LinearCombination[Key]:
    """
    Correct a standard basis element into its bar-invariant canonical element.

    Starting from start = b_top, repeatedly take the highest-ranked key in
    bar(v) - v. Its coefficient c is antisymmetric under bar, and adding
    c_- * canonical(key), with c_- the negative-degree part of c, kills it
    without touching higher keys.

    Args:
        start: The standard basis element b_top
        bar: The bar involution on combinations
        rank: Position of a key in a linear extension of the order
        canonical: Canonical element of a strictly lower key

    Returns:
        The unique bar-invariant element b_top + sum of t^{-1}Z[t^{-1}] b_lower
    """
    current = start
    while True:
        defect = bar(current) - current
        if defect.is_zero():
            return current
        key = max(defect.terms, key=rank)
        correction = defect.coefficient(key).negative_part()
        if correction.is_zero():
            raise KLError(f"bar defect at {key} has no negative part: {defect.coefficient(key)}")
        current = current + canonical(key).scale(correction)


