"""
Lifts of P_n to generalized Heisenberg groups.

For each triple j < t < i the composite

    pi = sigma . Delta . p : P_n -> Z^3 -> Z^6 -> Z^6

pulls the class chi_3 = x1*y1 + x2*y2 + x3*y3 back to the three-term relator,
which vanishes in H^2(P_n). The obstruction to lifting pi through the
central extension classified by chi_3 is therefore zero, and mod 2 the same
holds for Spin(7).
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Any, Dict, List, Sequence, Tuple

from sympy import GF, ImmutableMatrix
from sympy.polys.matrices import DomainMatrix

from arnold_algebra import (
    ExteriorElement,
    GeneratorIndex,
    Ring,
    basis,
    generators,
    pair_index,
    straighten,
    straighten_word,
    three_term_relator,
)
from char_classes import ToralRep, is_stably_trivial
from errors import TripleError

logger = logging.getLogger(__name__)

F2 = GF(2)


@dataclass(frozen=True)
class LinearMap:
    """Integer matrix acting on column vectors: rows are target coordinates."""
    matrix: ImmutableMatrix

    @property
    def source_rank(self) -> int:
        return self.matrix.cols

    @property
    def target_rank(self) -> int:
        return self.matrix.rows

    def __call__(self, vector: Sequence[int]) -> Tuple[int, ...]:
        out = self.matrix * ImmutableMatrix(list(vector))
        return tuple(int(x) for x in out)

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        """self after other."""
        return LinearMap(ImmutableMatrix(self.matrix * other.matrix))

    def rows(self) -> List[List[int]]:
        return [[int(x) for x in self.matrix.row(k)] for k in range(self.target_rank)]


@dataclass(frozen=True)
class HeisenbergClass:
    """chi_g = sum_k x_k y_k on Z^2g, coordinates ordered x1, y1, ..., xg, yg."""
    g: int

    def pairs(self) -> List[Tuple[int, int]]:
        return [(2 * k, 2 * k + 1) for k in range(self.g)]

    def pullback(self, forms: Sequence[ExteriorElement]) -> ExteriorElement:
        if len(forms) != 2 * self.g:
            raise ValueError(f"chi_{self.g} pulls back along {2 * self.g} linear forms, got {len(forms)}")
        total = ExteriorElement.zero(forms[0].n, 2, forms[0].ring)
        for a, b in self.pairs():
            total = total + forms[a].wedge(forms[b])
        return total

    def __str__(self):
        return " + ".join(f"x{k + 1}*y{k + 1}" for k in range(self.g))


def _check_triple(n: int, i: int, t: int, j: int):
    if not 1 <= j < t < i <= n:
        raise TripleError(f"need 1 <= j < t < i <= {n}, got (i, t, j) = ({i}, {t}, {j})")


def triples(n: int) -> List[Tuple[int, int, int]]:
    """All (i, t, j) with 1 <= j < t < i <= n."""
    return [(i, t, j) for j, t, i in combinations(range(1, n + 1), 3)]


def p_map(n: int, i: int, t: int, j: int) -> LinearMap:
    """Abelianized P_n -> Z^3 dual to A[i,j], A[i,t], A[t,j]."""
    _check_triple(n, i, t, j)
    size = comb(n, 2)
    rows = []
    for a, b in ((i, j), (i, t), (t, j)):
        row = [0] * size
        row[pair_index(n, GeneratorIndex(a, b))] = 1
        rows.append(row)
    return LinearMap(ImmutableMatrix(rows))


def delta_map() -> LinearMap:
    """(n1, n2, n3) -> (n1, -n1, n2, n2, n3, n3)."""
    return LinearMap(ImmutableMatrix([
        [1, 0, 0],
        [-1, 0, 0],
        [0, 1, 0],
        [0, 1, 0],
        [0, 0, 1],
        [0, 0, 1],
    ]))


def sigma_map() -> LinearMap:
    """(n1, ..., n6) -> (n1, n3, n2, n5, n4, n6)."""
    order = [0, 2, 1, 4, 3, 5]
    return LinearMap(ImmutableMatrix([[int(c == src) for c in range(6)] for src in order]))


def pi_map(n: int, i: int, t: int, j: int) -> LinearMap:
    return sigma_map() @ delta_map() @ p_map(n, i, t, j)


def pullback_chi(n: int, i: int, t: int, j: int, ring: Ring = Ring.Z) -> ExteriorElement:
    """pi^* chi_3 in the free exterior algebra, before straightening."""
    forms = [ExteriorElement.linear_form(n, row, ring) for row in pi_map(n, i, t, j).rows()]
    return HeisenbergClass(3).pullback(forms)


def spin7_rep(n: int, i: int, t: int, j: int) -> ToralRep:
    """pi mod 2 followed by (Z/2)^6 in SO(7): the six coordinate rows plus their sum."""
    rows = [tuple(x % 2 for x in row) for row in pi_map(n, i, t, j).rows()]
    parity = tuple(sum(col) % 2 for col in zip(*rows))
    return ToralRep(tuple(rows) + (parity,), comb(n, 2), special_orthogonal=True)


def _f2_rank(vectors: List[List[int]], width: int) -> int:
    if not vectors or not width:
        return 0
    M = DomainMatrix([[F2.convert(x % 2) for x in v] for v in vectors], (len(vectors), width), F2)
    return M.rank()


def graded_injectivity(n: int) -> Dict[str, Any]:
    """
    Rank counts for Gamma^1/Gamma^3 (x) Z/2 -> Spin(7)^C(n,3). In degree one the
    images of the p maps must span H^1(P_n; F2); in degree two the relators must
    span the kernel of the cup product Lambda^2 H^1 -> H^2 over F2.
    """
    if n < 3:
        raise TripleError(f"P_{n} has no triples j < t < i")
    gens = generators(n)
    m = len(gens)
    degree1 = [row for i, t, j in triples(n) for row in p_map(n, i, t, j).rows()]
    degree1_rank = _f2_rank(degree1, m)

    pairs = list(combinations(range(m), 2))
    pair_pos = {p: k for k, p in enumerate(pairs)}
    relators = []
    for i, t, j in triples(n):
        rel = three_term_relator(n, i, t, j, Ring.F2)
        vec = [0] * len(pairs)
        for (a, b), c in rel.terms:
            vec[pair_pos[(pair_index(n, a), pair_index(n, b))]] = c
        relators.append(vec)
    relator_rank = _f2_rank(relators, len(pairs))

    h2 = basis(n, 2)
    h2_pos = {mono: k for k, mono in enumerate(h2)}
    cup_rows = []
    for a, b in pairs:
        vec = [0] * len(h2)
        for mono, c in straighten_word(n, (gens[a], gens[b]), 1, Ring.F2).terms:
            vec[h2_pos[mono]] = c
        cup_rows.append(vec)
    kernel_dim = len(pairs) - _f2_rank(cup_rows, len(h2))

    report = {
        "n": n,
        "degree1_rank": degree1_rank,
        "h1_dim": m,
        "relator_rank": relator_rank,
        "cup_kernel_dim": kernel_dim,
        "injective": degree1_rank == m and relator_rank == kernel_dim,
    }
    logger.info("Graded injectivity for P_%d: %s", n, report)
    return report


def verify_all_lifts(n: int) -> Dict[str, Any]:
    if n < 3:
        raise TripleError(f"P_{n} has no triples j < t < i")
    details = []
    for i, t, j in triples(n):
        raw = pullback_chi(n, i, t, j)
        obstruction = straighten(raw)
        matches = raw == three_term_relator(n, i, t, j)
        spin7 = is_stably_trivial(spin7_rep(n, i, t, j)) and not straighten(raw.reduce_mod2())
        details.append({
            "triple": [i, t, j],
            "pullback": str(raw),
            "obstruction": str(obstruction),
            "matches_relator": matches,
            "spin7_liftable": spin7,
            "result": "pass" if matches and not obstruction and spin7 else "fail",
        })

    span = _f2_rank([row for i, t, j in triples(n) for row in p_map(n, i, t, j).rows()], comb(n, 2))
    passed = sum(1 for d in details if d["result"] == "pass")
    report = {
        "n": n,
        "total": len(details),
        "passed": passed,
        "failed": len(details) - passed,
        "degree1_span": span,
        "h1_dim": comb(n, 2),
        "spans_h1": span == comb(n, 2),
        "details": details,
    }
    logger.info("Heisenberg lifts on P_%d: %d/%d triples unobstructed, degree-1 span %d/%d",
                n, passed, len(details), span, comb(n, 2))
    return report
