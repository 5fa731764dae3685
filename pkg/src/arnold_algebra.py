"""
Cohomology of the pure braid group P_n: the exterior algebra on degree-one
classes A[i,j] (1 <= j < i <= n) modulo the three-term relations

    A[i,j]*A[i,t] - A[t,j]*A[i,t] + A[t,j]*A[i,j],   1 <= j < t < i <= n,

over Z or F2. Classes are kept in the admissible basis: products whose first
indices strictly increase.
"""
import re
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Type, TypeVar

from errors import ClassSyntaxError, DegreeError, GeneratorIndexError, RingMismatchError


class Ring(Enum):
    Z = "Z"
    F2 = "F2"

    def reduce(self, c: int) -> int:
        return c % 2 if self is Ring.F2 else c


class GeneratorIndex(NamedTuple):
    i: int
    j: int

    def __str__(self):
        return f"A[{self.i},{self.j}]"


Monomial = Tuple[GeneratorIndex, ...]
Terms = Tuple[Tuple[Monomial, int], ...]


def generator_index(n: int, i: int, j: int) -> GeneratorIndex:
    if not 1 <= j < i <= n:
        raise GeneratorIndexError(f"A[{i},{j}] is not a generator of P_{n} (need 1 <= j < i <= {n})")
    return GeneratorIndex(i, j)


def generators(n: int) -> List[GeneratorIndex]:
    """Degree-one generators in lexicographic order; this order indexes the abelianization Z^C(n,2)."""
    return [GeneratorIndex(i, j) for i in range(2, n + 1) for j in range(1, i)]


def pair_index(n: int, g: GeneratorIndex) -> int:
    generator_index(n, g.i, g.j)
    return (g.i - 1) * (g.i - 2) // 2 + (g.j - 1)


def sort_with_sign(word: Sequence[GeneratorIndex]) -> Tuple[int, Optional[Monomial]]:
    """Sort a word of degree-one generators; each transposition flips the sign. Repeats give zero."""
    if len(set(word)) < len(word):
        return 0, None
    inversions = sum(1 for a, b in combinations(word, 2) if a > b)
    return (-1) ** inversions, tuple(sorted(word))


def is_admissible(mono: Monomial) -> bool:
    return all(a.i < b.i for a, b in zip(mono, mono[1:])) and all(g.j < g.i for g in mono)


def termination_measure(word: Monomial) -> Tuple[int, ...]:
    """Multiset of first indices, sorted descending; each rewrite step strictly decreases it."""
    return tuple(sorted((g.i for g in word), reverse=True))


def rewrite_step(word: Monomial) -> Optional[List[Tuple[int, Monomial]]]:
    """
    One application of A[i,j]A[i,t] -> A[t,j]A[i,t] - A[t,j]A[i,j] (j < t < i)
    to the leftmost pair of factors sharing a first index. `word` must be
    sorted; the result words are sorted again with their signs. Returns None
    when the word is already admissible.
    """
    for p in range(len(word) - 1):
        a, b = word[p], word[p + 1]
        if a.i != b.i:
            continue
        i, j, t = a.i, a.j, b.j
        out = []
        for coef, pair in ((1, (GeneratorIndex(t, j), GeneratorIndex(i, t))),
                           (-1, (GeneratorIndex(t, j), GeneratorIndex(i, j)))):
            sign, w = sort_with_sign(word[:p] + pair + word[p + 2:])
            if w is not None:
                out.append((coef * sign, w))
        return out
    return None


@lru_cache(maxsize=None)
def _normal_form(word: Monomial) -> Terms:
    step = rewrite_step(word)
    if step is None:
        return ((word, 1),)
    acc: Dict[Monomial, int] = defaultdict(int)
    for coef, w in step:
        for mono, c in _normal_form(w):
            acc[mono] += coef * c
    return tuple(sorted((m, c) for m, c in acc.items() if c))


G = TypeVar("G", bound="GradedElement")


@dataclass(frozen=True)
class GradedElement:
    """Homogeneous element of an exterior algebra on the A[i,j], with sorted terms and no zero coefficients."""
    n: int
    ring: Ring
    degree: int
    terms: Terms = ()

    def __post_init__(self):
        for mono, c in self.terms:
            if len(mono) != self.degree:
                raise DegreeError(f"monomial {_format_monomial(mono)} does not have degree {self.degree}")
            for g in mono:
                generator_index(self.n, g.i, g.j)
            if not c:
                raise ValueError("zero coefficient stored")
            self._check_monomial(mono)

    def _check_monomial(self, mono: Monomial):
        pass

    @classmethod
    def from_mapping(cls: Type[G], n: int, ring: Ring, degree: int, mapping: Dict[Monomial, int]) -> G:
        terms = []
        for mono, c in sorted(mapping.items()):
            c = ring.reduce(c)
            if c:
                terms.append((mono, c))
        return cls(n, ring, degree, tuple(terms))

    @classmethod
    def zero(cls: Type[G], n: int, degree: int, ring: Ring = Ring.Z) -> G:
        return cls(n, ring, degree, ())

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def support(self) -> List[Monomial]:
        return [m for m, _ in self.terms]

    def _compatible(self, other: "GradedElement"):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.n != self.n or other.ring is not self.ring:
            raise RingMismatchError(
                f"classes live in different algebras: P_{self.n} over {self.ring.value} "
                f"vs P_{other.n} over {other.ring.value}")

    def __add__(self: G, other: G) -> G:
        self._compatible(other)
        if other.degree != self.degree:
            if other.is_zero():
                return self
            if self.is_zero():
                return other
            raise DegreeError(f"cannot add degree {self.degree} and degree {other.degree} classes")
        acc: Dict[Monomial, int] = defaultdict(int)
        for mono, c in self.terms + other.terms:
            acc[mono] += c
        return type(self).from_mapping(self.n, self.ring, self.degree, acc)

    def __neg__(self: G) -> G:
        return self.scale(-1)

    def __sub__(self: G, other: G) -> G:
        return self + (-other)

    def scale(self: G, k: int) -> G:
        return type(self).from_mapping(self.n, self.ring, self.degree, {m: k * c for m, c in self.terms})

    def __rmul__(self: G, k: int) -> G:
        if isinstance(k, int):
            return self.scale(k)
        return NotImplemented

    def __mul__(self: G, other) -> G:
        if isinstance(other, int):
            return self.scale(other)
        self._compatible(other)
        acc: Dict[Monomial, int] = defaultdict(int)
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                for mono, c in self._multiply_monomials(m1, m2):
                    acc[mono] += c1 * c2 * c
        return type(self).from_mapping(self.n, self.ring, self.degree + other.degree, acc)

    def _multiply_monomials(self, m1: Monomial, m2: Monomial) -> Iterable[Tuple[Monomial, int]]:
        raise NotImplementedError

    def reduce_mod2(self: G) -> G:
        return type(self).from_mapping(self.n, Ring.F2, self.degree, dict(self.terms))

    def __str__(self):
        return format_terms(self.terms)


@dataclass(frozen=True)
class ExteriorElement(GradedElement):
    """Element of the free exterior algebra on the A[i,j] (no three-term relation)."""

    def _check_monomial(self, mono: Monomial):
        if any(a >= b for a, b in zip(mono, mono[1:])):
            raise ValueError(f"exterior monomial {_format_monomial(mono)} is not sorted")

    @classmethod
    def word(cls, n: int, word: Sequence[GeneratorIndex], coefficient: int = 1,
             ring: Ring = Ring.Z) -> "ExteriorElement":
        """The formal product of `word` times `coefficient`, sorted with sign."""
        word = tuple(generator_index(n, g[0], g[1]) for g in word)
        sign, mono = sort_with_sign(word)
        if mono is None:
            return cls.zero(n, len(word), ring)
        return cls.from_mapping(n, ring, len(word), {mono: sign * coefficient})

    @classmethod
    def linear_form(cls, n: int, coefficients: Sequence[int], ring: Ring = Ring.Z) -> "ExteriorElement":
        """sum_k coefficients[k] * A_k with A_k the k-th generator of `generators(n)`."""
        gens = generators(n)
        if len(coefficients) != len(gens):
            raise DegreeError(f"linear form on P_{n} needs {len(gens)} coefficients, got {len(coefficients)}")
        return cls.from_mapping(n, ring, 1, {(g,): int(c) for g, c in zip(gens, coefficients)})

    def _multiply_monomials(self, m1, m2):
        sign, mono = sort_with_sign(m1 + m2)
        if mono is not None:
            yield mono, sign

    wedge = GradedElement.__mul__

    def straighten(self) -> "ArnoldClass":
        return straighten(self)


@dataclass(frozen=True)
class ArnoldClass(GradedElement):
    """Class in H^*(P_n) written in the admissible basis."""

    def _check_monomial(self, mono: Monomial):
        if not is_admissible(mono):
            raise ValueError(f"monomial {_format_monomial(mono)} is not admissible")

    def _multiply_monomials(self, m1, m2):
        sign, mono = sort_with_sign(m1 + m2)
        if mono is not None:
            for m, c in _normal_form(mono):
                yield m, sign * c


def generator(n: int, i: int, j: int, ring: Ring = Ring.Z) -> ArnoldClass:
    g = generator_index(n, i, j)
    return ArnoldClass(n, ring, 1, (((g,), 1),))


def unit(n: int, ring: Ring = Ring.Z) -> ArnoldClass:
    return ArnoldClass(n, ring, 0, (((), 1),))


def straighten(raw: ExteriorElement) -> ArnoldClass:
    """Rewrite a free exterior element into the admissible basis."""
    acc: Dict[Monomial, int] = defaultdict(int)
    for mono, c in raw.terms:
        for m, k in _normal_form(mono):
            acc[m] += c * k
    return ArnoldClass.from_mapping(raw.n, raw.ring, raw.degree, acc)


def straighten_word(n: int, word: Sequence[GeneratorIndex], coefficient: int = 1,
                    ring: Ring = Ring.Z) -> ArnoldClass:
    return straighten(ExteriorElement.word(n, word, coefficient, ring))


def multiply(a: ArnoldClass, b: ArnoldClass) -> ArnoldClass:
    return a * b


def three_term_relator(n: int, i: int, t: int, j: int, ring: Ring = Ring.Z) -> ExteriorElement:
    """A[i,j]A[i,t] - A[t,j]A[i,t] + A[t,j]A[i,j] for 1 <= j < t < i <= n, unstraightened."""
    if not 1 <= j < t < i <= n:
        raise GeneratorIndexError(f"three-term relator needs 1 <= j < t < i <= {n}, got ({i},{t},{j})")
    A = lambda a, b: GeneratorIndex(a, b)
    return (ExteriorElement.word(n, (A(i, j), A(i, t)), 1, ring)
            + ExteriorElement.word(n, (A(t, j), A(i, t)), -1, ring)
            + ExteriorElement.word(n, (A(t, j), A(i, j)), 1, ring))


def basis(n: int, t: int) -> List[Monomial]:
    """Admissible monomials of degree t, lexicographically ordered; empty above degree n-1."""
    if t < 0 or t > n - 1:
        return []
    out = []
    for firsts in combinations(range(2, n + 1), t):
        for seconds in product(*(range(1, i) for i in firsts)):
            out.append(tuple(GeneratorIndex(i, j) for i, j in zip(firsts, seconds)))
    return sorted(out)


def dim(n: int, t: int) -> int:
    return len(basis(n, t))


def reduce_mod2(a: ArnoldClass) -> ArnoldClass:
    return a.reduce_mod2()


# -- text syntax -------------------------------------------------------------

_TERM = re.compile(r"([+-]?)([^+-]+)")
_FACTOR = re.compile(r"A\[(\d+),(\d+)\]")


def _format_monomial(mono: Monomial) -> str:
    return "*".join(str(g) for g in mono)


def format_terms(terms: Terms) -> str:
    if not terms:
        return "0"
    out = []
    for k, (mono, c) in enumerate(terms):
        body = _format_monomial(mono)
        mag = abs(c)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if k == 0:
            out.append(("-" if c < 0 else "") + text)
        else:
            out.append(f" {'-' if c < 0 else '+'} {text}")
    return "".join(out)


def format_class(a: GradedElement) -> str:
    return format_terms(a.terms)


def parse_class(text: str, n: int, ring: Ring = Ring.Z, degree: Optional[int] = None,
                cls: Type[G] = ArnoldClass) -> G:
    """
    Parse `A[i,j]` syntax such as `A[3,1]*A[3,2] - 2*A[2,1]*A[3,2]`. ArnoldClass
    results are straightened; a bare `0` needs an explicit degree.
    """
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ClassSyntaxError("empty class expression")
    matches = list(_TERM.finditer(s))
    if sum(len(m.group(0)) for m in matches) != len(s):
        raise ClassSyntaxError(f"cannot parse class expression {text!r}")

    pieces = []
    for m in matches:
        coef = -1 if m.group(1) == "-" else 1
        word = []
        for factor in m.group(2).split("*"):
            if factor.isdigit():
                coef *= int(factor)
                continue
            fm = _FACTOR.fullmatch(factor)
            if not fm:
                raise ClassSyntaxError(f"bad factor {factor!r} in {text!r}")
            word.append(generator_index(n, int(fm.group(1)), int(fm.group(2))))
        pieces.append(ExteriorElement.word(n, word, coef, ring))

    degrees = {p.degree for p in pieces if p} or {p.degree for p in pieces}
    if len(degrees) > 1:
        raise DegreeError(f"class {text!r} is not homogeneous (degrees {sorted(degrees)})")
    if degree is None:
        degree = degrees.pop()
    elif any(pieces) and degrees != {degree}:
        raise DegreeError(f"class {text!r} has degree {degrees.pop()}, expected {degree}")

    total = ExteriorElement.zero(n, degree, ring)
    for p in pieces:
        if p:
            total = total + p
    if cls is ArnoldClass:
        return straighten(total)
    return total
