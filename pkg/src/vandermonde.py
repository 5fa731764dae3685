
import logging
from dataclasses import dataclass
from typing import Sequence, Tuple

from sympy import QQ_I
from sympy.combinatorics import Permutation
from sympy.polys.matrices import DomainMatrix

from errors import ConfigurationError, ConsistencyError, PermutationError
from exact_values import format_gaussian, parse_gaussian

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RationalComplexConfiguration:
    """n pairwise distinct points of C with Gaussian rational coordinates."""
    points: Tuple[QQ_I.dtype, ...]

    def __post_init__(self):
        points = tuple(QQ_I.convert(z) for z in self.points)
        object.__setattr__(self, "points", points)
        if not points:
            raise ConfigurationError("a configuration needs at least one point")
        if len(set(points)) != len(points):
            seen = set()
            for k, z in enumerate(points):
                if z in seen:
                    raise ConfigurationError(f"point {k + 1} ({format_gaussian(z)}) repeats an earlier point")
                seen.add(z)

    @classmethod
    def parse(cls, text: str) -> "RationalComplexConfiguration":
        return cls(tuple(parse_gaussian(p) for p in text.split(",")))

    @property
    def n(self) -> int:
        return len(self.points)

    def permuted(self, perm: Permutation) -> "RationalComplexConfiguration":
        return RationalComplexConfiguration(permute(perm, self.points))

    def __str__(self):
        return ", ".join(format_gaussian(z) for z in self.points)


def permute(perm: Permutation, values: Sequence) -> Tuple:
    """The entry at position j moves to position perm(j)."""
    if perm.size != len(values):
        raise PermutationError(f"permutation of {perm.size} letters applied to {len(values)} entries")
    out = [None] * len(values)
    for j, v in enumerate(values):
        out[perm(j)] = v
    return tuple(out)


def vandermonde_matrix(config: RationalComplexConfiguration) -> DomainMatrix:
    """V[i][j] = z_j^i (0-based)."""
    n = config.n
    rows = [[z ** i for z in config.points] for i in range(n)]
    return DomainMatrix(rows, (n, n), QQ_I)


def vandermonde_determinant(config: RationalComplexConfiguration):
    det = vandermonde_matrix(config).det()
    expected = QQ_I.one
    for k in range(config.n):
        for j in range(k):
            expected = expected * (config.points[k] - config.points[j])
    if det != expected:
        raise ConsistencyError(f"Vandermonde determinant {format_gaussian(det)} "
                               f"differs from the product formula {format_gaussian(expected)}")
    if not det:
        raise ConsistencyError("Vandermonde determinant vanishes for distinct points")
    return det


def trivialization(config: RationalComplexConfiguration, x: Sequence) -> Tuple:
    """y_i = sum_j z_j^(i-1) x_j."""
    if len(x) != config.n:
        raise ConfigurationError(f"need {config.n} coefficients, got {len(x)}")
    x = [QQ_I.convert(v) for v in x]
    y = []
    for i in range(config.n):
        acc = QQ_I.zero
        for z, v in zip(config.points, x):
            acc = acc + z ** i * v
        y.append(acc)
    return tuple(y)


def vandermonde_trivialization_check(config: RationalComplexConfiguration, perm: Permutation,
                                     x: Sequence) -> bool:
    """The fibrewise map (z, x) -> (z, V(z) x) is invertible and unchanged when z and x are permuted together."""
    vandermonde_determinant(config)
    y = trivialization(config, x)
    y_perm = trivialization(config.permuted(perm), permute(perm, tuple(QQ_I.convert(v) for v in x)))
    ok = y == y_perm
    logger.debug("Vandermonde check on %d points: %s", config.n, "equivariant" if ok else "NOT equivariant")
    return ok
