
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyElement, ring

from errors import NonUnitError
from exact_values import format_matrix

R, T = ring("t", ZZ)
POLY_DOMAIN = R.to_domain()


class LaurentPolynomial:
    """
    An element poly(t) * t^shift of Z[t, t^-1], kept with poly not divisible
    by t (and shift 0 for the zero polynomial).
    """
    __slots__ = ("poly", "shift")

    def __init__(self, poly: Union[PolyElement, int] = 0, shift: int = 0):
        poly = R(poly)
        if poly:
            low = min(m[0] for m in poly.monoms())
            if low:
                poly = R.from_dict({(e - low,): c for (e,), c in poly.terms()})
                shift += low
        else:
            shift = 0
        self.poly = poly
        self.shift = shift

    @classmethod
    def from_terms(cls, terms: Dict[int, int]) -> "LaurentPolynomial":
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls()
        low = min(terms)
        return cls(R.from_dict({(e - low,): c for e, c in terms.items()}), low)

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        return cls.from_terms({exponent: coefficient})

    def terms(self) -> List[Tuple[int, int]]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted((e + self.shift, int(c)) for (e,), c in self.poly.terms())

    def is_zero(self) -> bool:
        return not self.poly

    def __bool__(self):
        return bool(self.poly)

    def is_unit(self) -> bool:
        terms = self.terms()
        return len(terms) == 1 and abs(terms[0][1]) == 1

    def inverse(self) -> "LaurentPolynomial":
        if not self.is_unit():
            raise NonUnitError(f"{self} is not a unit of Z[t, t^-1]")
        (e, c), = self.terms()
        return LaurentPolynomial.monomial(-e, c)

    @staticmethod
    def _coerce(other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return LaurentPolynomial(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        s = min(self.shift, other.shift)
        return LaurentPolynomial(self.poly * T ** (self.shift - s) + other.poly * T ** (other.shift - s), s)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(-self.poly, self.shift)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPolynomial(self.poly * other.poly, self.shift + other.shift)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return LaurentPolynomial(self.poly ** k, self.shift * k)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.shift == other.shift and self.poly == other.poly

    def __hash__(self):
        return hash((self.shift, tuple(self.terms())))

    def evaluate(self, value, domain=QQ):
        """Substitute t = value, an element of `domain` (QQ or QQ_I)."""
        value = domain.convert(value)
        if not value:
            raise NonUnitError("cannot evaluate a Laurent polynomial at t = 0")
        total = domain.zero
        for e, c in self.terms():
            power = value ** e if e >= 0 else domain.one / value ** (-e)
            total = total + domain.convert(c) * power
        return total

    def __str__(self):
        terms = self.terms()
        if not terms:
            return "0"
        out = []
        for k, (e, c) in enumerate(terms):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if k == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(f" {'-' if c < 0 else '+'} {body}")
        return "".join(out)

    def __repr__(self):
        return f"LaurentPolynomial({self})"


Entry = Union[LaurentPolynomial, int]


class LaurentMatrix:
    """Square matrix over Z[t, t^-1]."""

    def __init__(self, rows: Iterable[Sequence[Entry]]):
        self.entries: Tuple[Tuple[LaurentPolynomial, ...], ...] = tuple(
            tuple(LaurentPolynomial._coerce(x) for x in row) for row in rows)
        if any(len(row) != len(self.entries) for row in self.entries):
            raise ValueError("Laurent matrices must be square")

    @property
    def size(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, n: int) -> "LaurentMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij: Tuple[int, int]) -> LaurentPolynomial:
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if other.size != self.size:
            raise ValueError(f"cannot multiply {self.size}x{self.size} by {other.size}x{other.size}")
        n = self.size
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = LaurentPolynomial()
                for k in range(n):
                    if self.entries[i][k] and other.entries[k][j]:
                        acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return LaurentMatrix(out)

    __mul__ = __matmul__

    def __eq__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def det(self) -> LaurentPolynomial:
        """Clear negative powers row by row, take the determinant over Z[t], shift back."""
        if self.size == 0:
            return LaurentPolynomial(1)
        shifts = [min((e.shift for e in row if e), default=0) for row in self.entries]
        polys = [[e.poly * T ** (e.shift - s) if e else R.zero for e in row]
                 for row, s in zip(self.entries, shifts)]
        d = DomainMatrix(polys, (self.size, self.size), POLY_DOMAIN).det()
        return LaurentPolynomial(d, sum(shifts))

    def specialize(self, value, domain=QQ) -> DomainMatrix:
        return DomainMatrix([[e.evaluate(value, domain) for e in row] for row in self.entries],
                            (self.size, self.size), domain)

    def __str__(self):
        return format_matrix(self.entries, str)

    def __repr__(self):
        return f"LaurentMatrix({self})"
