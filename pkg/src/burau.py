"""
The unreduced Burau representation b: B_n -> GL(n, Z[t, t^-1]),

    b(sigma_k) = diag(I_{k-1}, [[1 - t, t], [1, 0]], I_{n-k-1}),

with braid words, specialization at units and the t = 1 permutation image.
"""
import logging
import re
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import List, Tuple

from sympy import QQ, QQ_I
from sympy.combinatorics import Permutation
from sympy.polys.matrices import DomainMatrix

from errors import BraidWordError, ConsistencyError, NonUnitError, PermutationError
from laurent import LaurentMatrix, LaurentPolynomial

logger = logging.getLogger(__name__)

LETTER = re.compile(r"^s(\d+)(?:\^(-?1))?$")
CYCLE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True)
class BraidWord:
    """sigma_{k_1}^{e_1} ... sigma_{k_m}^{e_m} in B_strands, letters stored as (k, e)."""
    strands: int
    letters: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise BraidWordError(f"braid groups need at least 2 strands, got {self.strands}")
        for k, e in self.letters:
            if not 1 <= k <= self.strands - 1:
                raise BraidWordError(f"generator s{k} out of range for B_{self.strands}")
            if e not in (1, -1):
                raise BraidWordError(f"exponent of s{k} must be 1 or -1, got {e}")

    def exponent_sum(self) -> int:
        return sum(e for _, e in self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise BraidWordError(f"cannot concatenate words in B_{self.strands} and B_{other.strands}")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple((k, -e) for k, e in reversed(self.letters)))

    def __str__(self):
        return " ".join(f"s{k}" if e == 1 else f"s{k}^-1" for k, e in self.letters)


def parse_braid_word(text: str, n: int) -> BraidWord:
    """Whitespace-separated letters `s3` and `s3^-1`."""
    letters = []
    for tok in text.split():
        m = LETTER.match(tok)
        if not m:
            raise BraidWordError(f"malformed braid letter {tok!r} (expected s<k> or s<k>^-1)")
        letters.append((int(m.group(1)), int(m.group(2) or 1)))
    return BraidWord(n, tuple(letters))


@lru_cache(maxsize=None)
def burau_generator(n: int, k: int, inverse: bool = False) -> LaurentMatrix:
    if n < 2 or not 1 <= k <= n - 1:
        raise BraidWordError(f"generator s{k} out of range for B_{n}")
    t = LaurentPolynomial.monomial(1)
    if inverse:
        t_inv = LaurentPolynomial.monomial(-1)
        block = [[0, 1], [t_inv, 1 - t_inv]]
    else:
        block = [[1 - t, t], [1, 0]]
    rows: List[list] = [[int(i == j) for j in range(n)] for i in range(n)]
    for a in range(2):
        for b in range(2):
            rows[k - 1 + a][k - 1 + b] = block[a][b]
    return LaurentMatrix(rows)


def burau(word: BraidWord) -> LaurentMatrix:
    return reduce(lambda acc, letter: acc @ burau_generator(word.strands, letter[0], letter[1] < 0),
                  word.letters, LaurentMatrix.identity(word.strands))


def specialize(m: LaurentMatrix, value) -> DomainMatrix:
    """Substitute a nonzero rational or Gaussian rational for t."""
    domain = QQ_I if isinstance(value, QQ_I.dtype) else QQ
    value = domain.convert(value)
    if not value:
        raise NonUnitError("t can only be specialized to a unit (nonzero value)")
    return m.specialize(value, domain)


def check_braid_relations(n: int) -> bool:
    gens = [burau_generator(n, k) for k in range(1, n)]
    ok = True
    for k in range(len(gens) - 1):
        a, b = gens[k], gens[k + 1]
        if a @ b @ a != b @ a @ b:
            logger.warning("Braid relation fails for s%d, s%d in B_%d", k + 1, k + 2, n)
            ok = False
    for i in range(len(gens)):
        for j in range(i + 2, len(gens)):
            if gens[i] @ gens[j] != gens[j] @ gens[i]:
                logger.warning("Far commutation fails for s%d, s%d in B_%d", i + 1, j + 1, n)
                ok = False
    logger.info("Burau braid relations for B_%d: %s", n, "hold" if ok else "FAIL")
    return ok


def permutation_at_1(word: BraidWord) -> Permutation:
    """The permutation whose matrix is b(word) at t = 1; column j has its 1 in row perm(j)."""
    rows = specialize(burau(word), QQ(1)).to_list()
    n = word.strands
    image = []
    for j in range(n):
        column = [rows[i][j] for i in range(n)]
        ones = [i for i, x in enumerate(column) if x == 1]
        if len(ones) != 1 or any(x not in (0, 1) for x in column):
            raise ConsistencyError(f"b({word}) at t = 1 is not a permutation matrix")
        image.append(ones[0])
    if sorted(image) != list(range(n)):
        raise ConsistencyError(f"b({word}) at t = 1 is not a permutation matrix")
    return Permutation(image)


def symmetric_image(word: BraidWord) -> Permutation:
    """Image in S_n via sigma_k -> (k k+1), composed left to right as maps."""
    perm = Permutation(list(range(word.strands)))
    for k, _ in word.letters:
        perm = Permutation(k - 1, k, size=word.strands) * perm
    return perm


def format_cycles(perm: Permutation) -> str:
    cycles = perm.cyclic_form
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cycles)


def parse_cycles(text: str, n: int) -> Permutation:
    """1-based cycle notation such as `(1 2 3)(4 5)`; `()` is the identity."""
    s = text.strip()
    if CYCLE.sub("", s).strip():
        raise PermutationError(f"malformed cycle notation {text!r}")
    cycles, seen = [], set()
    for body in CYCLE.findall(s):
        items = body.replace(",", " ").split()
        try:
            cycle = [int(x) for x in items]
        except ValueError:
            raise PermutationError(f"non-integer entry in cycle ({body})")
        for x in cycle:
            if not 1 <= x <= n:
                raise PermutationError(f"{x} is not in 1..{n}")
            if x in seen:
                raise PermutationError(f"{x} appears twice in {text!r}")
            seen.add(x)
        if len(cycle) > 1:
            cycles.append([x - 1 for x in cycle])
    if not cycles:
        return Permutation(list(range(n)))
    return Permutation(cycles, size=n)
