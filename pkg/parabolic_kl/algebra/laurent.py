"""Exact integer Laurent polynomials in one variable t."""

from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from parabolic_kl.utils.errors import CoefficientOverflowError, InvalidInputError

INT64_MIN = -(2 ** 63)
INT64_MAX = 2 ** 63 - 1

Scalar = Union[int, "LaurentPoly"]


def _checked(value: int) -> int:
    if value < INT64_MIN or value > INT64_MAX:
        raise CoefficientOverflowError(f"coefficient {value} does not fit in 64 bits")
    return value


class LaurentPoly:
    """
    Sparse Laurent polynomial with integer coefficients.

    Instances are immutable and hashable. Terms are kept as a tuple of
    (exponent, coefficient) pairs sorted by exponent with no zero
    coefficient, so equal polynomials have equal representations.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Union[Mapping[int, int], Iterable[Tuple[int, int]]]] = None):
        collected: Dict[int, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for exponent, coeff in items:
                collected[int(exponent)] = collected.get(int(exponent), 0) + int(coeff)
        self._terms: Tuple[Tuple[int, int], ...] = tuple(
            (e, _checked(c)) for e, c in sorted(collected.items()) if c != 0
        )

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, value: int) -> "LaurentPoly":
        return cls({0: value})

    @classmethod
    def _coerce(cls, other) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return cls.constant(other)
        return None

    @property
    def terms(self) -> Tuple[Tuple[int, int], ...]:
        return self._terms

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coefficient(self, exponent: int) -> int:
        for e, c in self._terms:
            if e == exponent:
                return c
        return 0

    @property
    def min_degree(self) -> Optional[int]:
        return self._terms[0][0] if self._terms else None

    @property
    def max_degree(self) -> Optional[int]:
        return self._terms[-1][0] if self._terms else None

    def __add__(self, other: Scalar) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPoly(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly((e, -c) for e, c in self._terms)

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        product: Dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                product[e1 + e2] = _checked(product.get(e1 + e2, 0) + _checked(c1 * c2))
        return LaurentPoly(product)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentPoly":
        if power < 0:
            if not self.is_monomial() or abs(self._terms[0][1]) != 1:
                raise InvalidInputError("only unit monomials have negative powers")
            (e, c), = self._terms
            return LaurentPoly.monomial(e * power, c ** (-power))
        result = ONE
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def bar(self) -> "LaurentPoly":
        """t -> t^{-1}."""
        return LaurentPoly((-e, c) for e, c in self._terms)

    def negate_variable(self) -> "LaurentPoly":
        """t -> -t."""
        return LaurentPoly((e, -c if e % 2 else c) for e, c in self._terms)

    def shift(self, exponent: int) -> "LaurentPoly":
        return LaurentPoly((e + exponent, c) for e, c in self._terms)

    def negative_part(self) -> "LaurentPoly":
        """Terms of strictly negative degree."""
        return LaurentPoly((e, c) for e, c in self._terms if e < 0)

    def evaluate(self, value: int) -> int:
        """Value at an integer point; only defined at t = 1 and t = -1 for negative degrees."""
        if value not in (1, -1) and self._terms and self._terms[0][0] < 0:
            raise InvalidInputError("negative powers can only be evaluated at t = +-1")
        return sum(c * value ** e if e >= 0 else c * value ** (-e) for e, c in self._terms)

    def to_json(self) -> Dict[str, int]:
        return {str(e): c for e, c in self._terms}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "LaurentPoly":
        try:
            return cls({int(e): int(c) for e, c in data.items()})
        except (TypeError, ValueError) as e:
            raise InvalidInputError(f"invalid polynomial JSON {data!r}: {e}")

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for index, (e, c) in enumerate(self._terms):
            magnitude = abs(c)
            if e == 0:
                body = str(magnitude)
            else:
                power = "t" if e == 1 else f"t^{e}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            if index == 0:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self._terms)!r})"

    def to_latex(self) -> str:
        """
        LaTeX rendering with the lowest power factored out, e.g. t^{-3}(1+t^2).

        Monomials and polynomials whose lowest power is t^0 are written as
        plain sums.
        """
        if not self._terms:
            return "0"
        low = self._terms[0][0]
        if self.is_monomial() or low == 0:
            return _latex_sum(self._terms)
        inner = _latex_sum(self.shift(-low).terms)
        return f"{_latex_power(low)}({inner})"


def _latex_power(exponent: int) -> str:
    if exponent == 0:
        return "1"
    if exponent == 1:
        return "t"
    return f"t^{{{exponent}}}" if exponent < 0 or exponent > 9 else f"t^{exponent}"


def _latex_sum(terms: Tuple[Tuple[int, int], ...]) -> str:
    out = []
    for index, (e, c) in enumerate(terms):
        magnitude = abs(c)
        if e == 0:
            body = str(magnitude)
        else:
            body = _latex_power(e) if magnitude == 1 else f"{magnitude}{_latex_power(e)}"
        sign = "-" if c < 0 else ("+" if index else "")
        out.append(sign + body)
    return "".join(out)


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
T = LaurentPoly.monomial(1)
T_INV = LaurentPoly.monomial(-1)
# t - t^{-1}, the off-diagonal coefficient of the quadratic relation
T_MINUS_T_INV = T - T_INV


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def bar(a: LaurentPoly) -> LaurentPoly:
    return a.bar()


def negate_variable(a: LaurentPoly) -> LaurentPoly:
    return a.negate_variable()


def signed_power(exponent: int) -> LaurentPoly:
    """(-t)^exponent."""
    return LaurentPoly.monomial(exponent, -1 if exponent % 2 else 1)


def parse_poly(text: str) -> LaurentPoly:
    """
    Parse the text rendering produced by str(), e.g. '-t^-1 + 2t^3 + 1'.
    """
    cleaned = text.replace(" ", "").replace("−", "-")
    if cleaned in ("", "0"):
        return ZERO
    terms: Dict[int, int] = {}
    index = 0
    while index < len(cleaned):
        sign = 1
        if cleaned[index] in "+-":
            sign = -1 if cleaned[index] == "-" else 1
            index += 1
        start = index
        while index < len(cleaned) and cleaned[index].isdigit():
            index += 1
        digits = cleaned[start:index]
        exponent = 0
        if index < len(cleaned) and cleaned[index] == "t":
            index += 1
            exponent = 1
            if index < len(cleaned) and cleaned[index] == "^":
                index += 1
                exp_start = index
                if index < len(cleaned) and cleaned[index] == "-":
                    index += 1
                while index < len(cleaned) and cleaned[index].isdigit():
                    index += 1
                try:
                    exponent = int(cleaned[exp_start:index])
                except ValueError:
                    raise InvalidInputError(f"cannot parse polynomial {text!r}")
        elif not digits:
            raise InvalidInputError(f"cannot parse polynomial {text!r}")
        coeff = int(digits) if digits else 1
        terms[exponent] = terms.get(exponent, 0) + sign * coeff
    return LaurentPoly(terms)
