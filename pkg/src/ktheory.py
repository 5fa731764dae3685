"""
Reduced K-groups of arrangement complements and of classifying spaces of
homologically toroidal groups, read off from Betti numbers.

For torsion-free integral cohomology, [X, BU] is the sum of the even
cohomology groups in positive degree and [X, BO] is the sum over q > 0 of
Hom(H_q(X), pi_q BO).
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Sequence

logger = logging.getLogger(__name__)

# pi_q(BO) for q mod 8 (Bott periodicity): "Z/2", "Z" or "0"
BOTT_BO = {1: "Z/2", 2: "Z/2", 3: "0", 4: "Z", 5: "0", 6: "0", 7: "0", 0: "Z"}


class Hypothesis(Enum):
    K_PI_1 = "K(pi,1)"
    SPACE = "space"


@dataclass(frozen=True)
class AbelianGroupDescriptor:
    """The group Z^free_rank + (Z/2)^two_torsion_rank."""
    free_rank: int = 0
    two_torsion_rank: int = 0

    def __post_init__(self):
        if self.free_rank < 0 or self.two_torsion_rank < 0:
            raise ValueError(f"ranks must be nonnegative, got {self.free_rank}, {self.two_torsion_rank}")

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and self.two_torsion_rank == 0

    def to_dict(self) -> Dict[str, int]:
        return {"free_rank": self.free_rank, "two_torsion_rank": self.two_torsion_rank}

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "AbelianGroupDescriptor":
        return cls(int(d.get("free_rank", 0)), int(d.get("two_torsion_rank", 0)))

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        if self.two_torsion_rank:
            parts.append(f"(Z/2)^{self.two_torsion_rank}")
        return " + ".join(parts) if parts else "0"


def _check(betti: Sequence[int]):
    if any(b < 0 for b in betti):
        raise ValueError(f"Betti numbers must be nonnegative: {list(betti)}")


def ku0(betti: Sequence[int]) -> AbelianGroupDescriptor:
    _check(betti)
    return AbelianGroupDescriptor(free_rank=sum(betti[q] for q in range(2, len(betti), 2)))


def ko0(betti: Sequence[int]) -> AbelianGroupDescriptor:
    _check(betti)
    free, torsion = 0, 0
    for q in range(1, len(betti)):
        coefficient = BOTT_BO[q % 8]
        if coefficient == "Z":
            free += betti[q]
        elif coefficient == "Z/2":
            torsion += betti[q]
    return AbelianGroupDescriptor(free, torsion)


def ko0_rep(betti: Sequence[int]) -> AbelianGroupDescriptor:
    """Subgroup of KO^0 hit by orthogonal representations: H^1(-; Z/2) + H^2(-; Z/2)."""
    _check(betti)
    return AbelianGroupDescriptor(two_torsion_rank=sum(betti[1:3]))


def ku0_rep() -> AbelianGroupDescriptor:
    """Unitary representations of homologically toroidal groups are stably trivial."""
    return AbelianGroupDescriptor()


def ktheory_summary(betti: Sequence[int], hypothesis: Hypothesis = Hypothesis.K_PI_1) -> Dict[str, Any]:
    summary = {
        "betti": list(betti),
        "hypothesis": hypothesis.value,
        "KU^0": ku0(betti).to_dict(),
        "KO^0": ko0(betti).to_dict(),
        "KO^0_rep": ko0_rep(betti).to_dict(),
        "KU^0_rep": ku0_rep().to_dict(),
    }
    logger.info("K-theory from Betti numbers %s under the %s hypothesis", list(betti), hypothesis.value)
    return summary
