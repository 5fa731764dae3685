
from dataclasses import dataclass
from itertools import combinations
from typing import Tuple

from sympy import QQ

from errors import ArrangementError


@dataclass(frozen=True)
class Hyperplane:
    """The affine hyperplane { z : normal . z = offset } in C^l."""
    normal: Tuple[QQ.dtype, ...]
    offset: QQ.dtype

    def __post_init__(self):
        if not any(self.normal):
            raise ArrangementError("hyperplane normal must be nonzero")

    def canonical(self) -> Tuple[QQ.dtype, ...]:
        """(normal, offset) scaled so the first nonzero normal entry is 1."""
        lead = next(c for c in self.normal if c)
        return tuple(c / lead for c in self.normal) + (self.offset / lead,)

    def __str__(self):
        return " ".join(str(c) for c in self.normal) + f" | {self.offset}"


@dataclass(frozen=True)
class Arrangement:
    ambient_dim: int
    hyperplanes: Tuple[Hyperplane, ...] = ()

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise ArrangementError(f"ambient dimension must be positive, got {self.ambient_dim}")
        seen = set()
        for idx, h in enumerate(self.hyperplanes):
            if len(h.normal) != self.ambient_dim:
                raise ArrangementError(
                    f"hyperplane {idx + 1} has {len(h.normal)} coordinates, expected {self.ambient_dim}")
            key = h.canonical()
            if key in seen:
                raise ArrangementError(f"hyperplane {idx + 1} duplicates an earlier hyperplane")
            seen.add(key)

    def __len__(self):
        return len(self.hyperplanes)


def _linear(normal, offset=0) -> Hyperplane:
    return Hyperplane(tuple(QQ(c) for c in normal), QQ(offset))


def braid_arrangement(n: int) -> Arrangement:
    """The hyperplanes z_i = z_j, 1 <= i < j <= n, in C^n."""
    if n < 2:
        raise ArrangementError(f"braid arrangement needs n >= 2, got {n}")
    hyperplanes = []
    for i, j in combinations(range(n), 2):
        normal = [0] * n
        normal[i], normal[j] = 1, -1
        hyperplanes.append(_linear(normal))
    return Arrangement(n, tuple(hyperplanes))


def boolean_arrangement(n: int) -> Arrangement:
    """The coordinate hyperplanes z_i = 0 in C^n; the complement is (C*)^n."""
    if n < 1:
        raise ArrangementError(f"boolean arrangement needs n >= 1, got {n}")
    hyperplanes = []
    for i in range(n):
        normal = [0] * n
        normal[i] = 1
        hyperplanes.append(_linear(normal))
    return Arrangement(n, tuple(hyperplanes))
