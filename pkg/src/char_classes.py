
import logging
from dataclasses import dataclass
from math import comb
from pathlib import Path
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from arnold_algebra import (
    ArnoldClass,
    ExteriorElement,
    Monomial,
    Ring,
    generator_index,
    generators,
    is_admissible,
    pair_index,
    reduce_mod2,
    straighten,
)
from errors import ConsistencyError, DegreeError, InputFileError, RepParseError, RepresentationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TorusClass:
    """
    A homogeneous class in H^*(Z^rank; F2), the exterior algebra on e_1..e_rank.
    Monomials are strictly increasing tuples of 0-based indices.
    """
    rank: int
    degree: int
    monomials: FrozenSet[Tuple[int, ...]] = frozenset()

    @classmethod
    def zero(cls, rank: int, degree: int) -> "TorusClass":
        return cls(rank, degree, frozenset())

    @classmethod
    def one(cls, rank: int) -> "TorusClass":
        return cls(rank, 0, frozenset({()}))

    @classmethod
    def linear(cls, row: Sequence[int]) -> "TorusClass":
        return cls(len(row), 1, frozenset((k,) for k, x in enumerate(row) if x % 2))

    def _check(self, other: "TorusClass"):
        if other.rank != self.rank:
            raise RepresentationError(f"classes on tori of rank {self.rank} and {other.rank}")

    def __add__(self, other: "TorusClass") -> "TorusClass":
        self._check(other)
        if other.degree != self.degree:
            if not other:
                return self
            if not self:
                return other
            raise DegreeError(f"cannot add degree {self.degree} and degree {other.degree} classes")
        return TorusClass(self.rank, self.degree, self.monomials ^ other.monomials)

    def __mul__(self, other: "TorusClass") -> "TorusClass":
        self._check(other)
        out = set()
        for a in self.monomials:
            for b in other.monomials:
                if set(a) & set(b):
                    continue
                out ^= {tuple(sorted(a + b))}
        return TorusClass(self.rank, self.degree + other.degree, frozenset(out))

    def __bool__(self):
        return bool(self.monomials)

    def sorted_monomials(self) -> List[Tuple[int, ...]]:
        return sorted(self.monomials)

    def to_arnold(self, strands: int) -> ArnoldClass:
        """Read e_k as the k-th generator of P_strands and straighten."""
        gens = generators(strands)
        if len(gens) != self.rank:
            raise RepresentationError(
                f"torus of rank {self.rank} is not the abelianization of P_{strands} (rank {len(gens)})")
        total = ExteriorElement.zero(strands, self.degree, Ring.F2)
        for mono in self.sorted_monomials():
            total = total + ExteriorElement.word(strands, [gens[k] for k in mono], 1, Ring.F2)
        return straighten(total)

    def __str__(self):
        if not self.monomials:
            return "0"
        return " + ".join("*".join(f"e{k + 1}" for k in m) if m else "1" for m in self.sorted_monomials())


@dataclass(frozen=True)
class ToralRep:
    """
    A representation Z^n -> (Z/2)^q -> O(q): row i is w_1 of the i-th line
    summand in the basis e_1..e_n. `special_orthogonal` marks matrices whose
    rows sum to zero (determinant one).
    """
    rows: Tuple[Tuple[int, ...], ...]
    n: int
    special_orthogonal: bool = False

    def __post_init__(self):
        for idx, row in enumerate(self.rows):
            if len(row) != self.n:
                raise RepresentationError(f"row {idx + 1} has {len(row)} entries, expected {self.n}")
            if any(x not in (0, 1) for x in row):
                raise RepresentationError(f"row {idx + 1} has entries outside {{0,1}}")
        if self.special_orthogonal and any(sum(col) % 2 for col in zip(*self.rows)):
            raise RepresentationError("rows of a special orthogonal representation must sum to zero")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], n: Optional[int] = None,
                  special_orthogonal: bool = False) -> "ToralRep":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if n is None:
            if not rows:
                raise RepresentationError("cannot infer the torus rank of an empty representation")
            n = len(rows[0])
        return cls(rows, n, special_orthogonal)

    @property
    def q(self) -> int:
        return len(self.rows)

    def row_class(self, idx: int) -> TorusClass:
        return TorusClass.linear(self.rows[idx])

    def __add__(self, other: "ToralRep") -> "ToralRep":
        return whitney_sum(self, other)


@dataclass(frozen=True)
class SWPair:
    w1: TorusClass
    w2: TorusClass

    def to_arnold(self, strands: int) -> Tuple[ArnoldClass, ArnoldClass]:
        return self.w1.to_arnold(strands), self.w2.to_arnold(strands)


@dataclass(frozen=True)
class PairingWitness:
    """
    Either a pairing of identical nonzero rows (0-based indices) or the first
    nonvanishing class among w1, w2. `residual` lists nonzero rows left
    unpaired by a trivial representation, which happens from q = 7 on.
    """
    pairs: Tuple[Tuple[int, int], ...] = ()
    zero_rows: Tuple[int, ...] = ()
    residual: Tuple[int, ...] = ()
    obstruction: Optional[TorusClass] = None
    obstruction_degree: Optional[int] = None

    @property
    def is_trivial(self) -> bool:
        return self.obstruction is None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "trivial": self.is_trivial,
            "pairs": [[a + 1, b + 1] for a, b in self.pairs],
            "zero_rows": [r + 1 for r in self.zero_rows],
            "residual": [r + 1 for r in self.residual],
            "obstruction": None if self.obstruction is None else str(self.obstruction),
            "obstruction_degree": self.obstruction_degree,
        }


def whitney_sum(a: ToralRep, b: ToralRep) -> ToralRep:
    if a.n != b.n:
        raise RepresentationError(f"Whitney sum of representations of Z^{a.n} and Z^{b.n}")
    return ToralRep(a.rows + b.rows, a.n, a.special_orthogonal and b.special_orthogonal)


def sw_total(rep: ToralRep, k: int) -> TorusClass:
    """w_k as the k-th elementary symmetric polynomial of the rows."""
    if k < 0:
        raise DegreeError(f"negative degree {k}")
    if k > rep.q:
        return TorusClass.zero(rep.n, k)
    elem = [TorusClass.one(rep.n)] + [TorusClass.zero(rep.n, d) for d in range(1, k + 1)]
    for idx in range(rep.q):
        r = rep.row_class(idx)
        for d in range(k, 0, -1):
            elem[d] = elem[d] + elem[d - 1] * r
    return elem[k]


def sw_pair(rep: ToralRep) -> SWPair:
    return SWPair(sw_total(rep, 1), sw_total(rep, 2))


def is_stably_trivial(rep: ToralRep) -> bool:
    pair = sw_pair(rep)
    return not pair.w1 and not pair.w2


def is_trivial_over_pure_braid(rep: ToralRep, strands: int) -> bool:
    """w1 and w2 vanish after pulling back along P_strands -> Z^C(strands,2)."""
    w1, w2 = sw_pair(rep).to_arnold(strands)
    return not w1 and not w2


def pairing_witness(rep: ToralRep) -> PairingWitness:
    pair = sw_pair(rep)
    if pair.w1:
        return PairingWitness(obstruction=pair.w1, obstruction_degree=1)
    if pair.w2:
        return PairingWitness(obstruction=pair.w2, obstruction_degree=2)

    pairs, zeros = [], []
    waiting: Dict[Tuple[int, ...], int] = {}
    for idx, row in enumerate(rep.rows):
        if not any(row):
            zeros.append(idx)
        elif row in waiting:
            pairs.append((waiting.pop(row), idx))
        else:
            waiting[row] = idx
    residual = tuple(sorted(waiting.values()))
    if residual:
        logger.warning("Stably trivial representation with %d unpaired rows", len(residual))
    return PairingWitness(tuple(sorted(pairs)), tuple(zeros), residual)


def _check_strands(n_strands: int) -> None:
    if n_strands < 1:
        raise RepresentationError(f"number of strands must be at least 1, got {n_strands}")


def _monomial_rows(n_strands: int, monomial: Sequence[Tuple[int, int]]) -> List[Tuple[int, ...]]:
    _check_strands(n_strands)
    mono: Monomial = tuple(generator_index(n_strands, g[0], g[1]) for g in monomial)
    if not is_admissible(mono):
        raise RepresentationError(
            "monomial " + "*".join(str(g) for g in mono) + " is not admissible")
    size = comb(n_strands, 2)
    rows = []
    for g in mono:
        row = [0] * size
        row[pair_index(n_strands, g)] = 1
        rows.append(tuple(row))
    return rows


def alpha_rep(n_strands: int, monomial: Sequence[Tuple[int, int]]) -> ToralRep:
    """P_n -> (Z/2)^t -> O(t), one coordinate row per factor of the monomial."""
    return ToralRep(tuple(_monomial_rows(n_strands, monomial)), comb(n_strands, 2))


def beta_rep(n_strands: int, monomial: Sequence[Tuple[int, int]]) -> ToralRep:
    """alpha_rep followed by (Z/2)^t -> SO(t+1): the extra row is the sum of the others."""
    rows = _monomial_rows(n_strands, monomial)
    size = comb(n_strands, 2)
    parity = tuple(sum(col) % 2 for col in zip(*rows)) if rows else (0,) * size
    return ToralRep(tuple(rows) + (parity,), size, special_orthogonal=True)


def realize_sw_torus(n: int, zeta1: TorusClass, zeta2: TorusClass) -> ToralRep:
    """A representation of Z^n with w1 = zeta1 and w2 = zeta2."""
    if zeta1.rank != n or zeta2.rank != n:
        raise RepresentationError(f"classes must live on the rank {n} torus")
    if zeta1.degree != 1 or zeta2.degree != 2:
        raise DegreeError(f"need classes of degree 1 and 2, got {zeta1.degree} and {zeta2.degree}")

    rep = ToralRep((), n)
    if zeta1:
        rep = rep + ToralRep((tuple(int((k,) in zeta1.monomials) for k in range(n)),), n)
    for a, b in zeta2.sorted_monomials():
        ea = tuple(int(k == a) for k in range(n))
        eb = tuple(int(k == b) for k in range(n))
        parity = tuple(x ^ y for x, y in zip(ea, eb))
        rep = rep + ToralRep((ea, eb, parity), n, special_orthogonal=True)

    got = sw_pair(rep)
    if got.w1 != zeta1 or got.w2 != zeta2:
        raise ConsistencyError(f"realization gives w1 = {got.w1}, w2 = {got.w2}; "
                               f"expected {zeta1}, {zeta2}")
    return rep


def realize_sw(n_strands: int, zeta1: ArnoldClass, zeta2: ArnoldClass) -> ToralRep:
    """
    A representation of P_n with prescribed w1 = zeta1 and w2 = zeta2: one
    line for zeta1 plus one beta block per admissible monomial of zeta2.
    """
    _check_strands(n_strands)
    for name, zeta, deg in (("zeta1", zeta1, 1), ("zeta2", zeta2, 2)):
        if not isinstance(zeta, ArnoldClass):
            raise RepresentationError(f"{name} must be a class in H^*(P_{n_strands})")
        if zeta.n != n_strands:
            raise RepresentationError(f"{name} is a class of P_{zeta.n}, expected P_{n_strands}")
        if zeta.degree != deg:
            raise DegreeError(f"{name} must have degree {deg}, got {zeta.degree}")
    zeta1, zeta2 = reduce_mod2(zeta1), reduce_mod2(zeta2)

    size = comb(n_strands, 2)
    t1 = TorusClass(size, 1, frozenset((pair_index(n_strands, m[0]),) for m in zeta1.support()))
    t2 = TorusClass(size, 2, frozenset(
        (pair_index(n_strands, m[0]), pair_index(n_strands, m[1])) for m in zeta2.support()))
    rep = realize_sw_torus(size, t1, t2)

    w1, w2 = sw_pair(rep).to_arnold(n_strands)
    if w1 != zeta1 or w2 != zeta2:
        raise ConsistencyError(f"realization gives w1 = {w1}, w2 = {w2}; expected {zeta1}, {zeta2}")
    logger.info("Realized (w1, w2) on P_%d with %d line summands", n_strands, rep.q)
    return rep


def ku_rep_is_trivial() -> bool:
    """Every unitary representation of a homologically toroidal group is stably trivial in KU."""
    return True


def parse_toral_rep(text: str, n: Optional[int] = None, special_orthogonal: bool = False) -> ToralRep:
    """Rows of space-separated 0/1 digits; blank lines and `#` comments are skipped."""
    rows = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        l = line.split("#", 1)[0].split()
        if not l:
            continue
        if any(tok not in ("0", "1") for tok in l):
            raise RepParseError(f"entries must be 0 or 1, got {' '.join(l)!r}", line_no)
        if n is None:
            n = len(l)
        elif len(l) != n:
            raise RepParseError(f"row has {len(l)} entries, expected {n}", line_no)
        rows.append(tuple(int(tok) for tok in l))
    if n is None:
        raise RepParseError("representation file has no rows")
    return ToralRep(tuple(rows), n, special_orthogonal)


def parse_toral_rep_file(path: Union[str, Path], n: Optional[int] = None) -> ToralRep:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise InputFileError(f"{path}: not UTF-8 text (byte {e.start})") from e
    except OSError as e:
        raise InputFileError(f"{path}: {e.strerror or e}") from e
    return parse_toral_rep(text, n)
