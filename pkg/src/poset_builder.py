
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx
from sympy import Poly, QQ, symbols
from sympy.polys.matrices import DomainMatrix

from arrangement import Arrangement
from errors import ConsistencyError

t = symbols("t")

# canonical form of a flat: the nonzero rows of the RREF of its augmented system [A | b]
Equations = Tuple[Tuple[QQ.dtype, ...], ...]


@dataclass(frozen=True)
class Flat:
    id: int
    defining_set: Tuple[int, ...]
    rank: int
    basepoint: Tuple[QQ.dtype, ...]
    direction_dim: int
    equations: Equations = field(repr=False, compare=False)


@dataclass
class IntersectionPoset:
    """
    Flats ordered by reverse inclusion (ambient space at the bottom). `graph`
    holds the cover relations as a networkx DiGraph on flat ids, edges pointing
    upward, with `rank` and `mobius` node attributes.
    """
    ambient_dim: int
    flats: Tuple[Flat, ...]
    graph: nx.DiGraph
    mobius: Dict[int, int]

    def leq(self, x: int, y: int) -> bool:
        return set(self.flats[x].defining_set) <= set(self.flats[y].defining_set)

    def below(self, x: int) -> List[int]:
        return sorted(nx.ancestors(self.graph, x))

    def cover_relations(self) -> List[Tuple[int, int]]:
        return sorted(self.graph.edges())

    def rank(self) -> int:
        return max(f.rank for f in self.flats)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "flats": [
                {
                    "id": f.id,
                    "rank": f.rank,
                    "defining_set": [i + 1 for i in f.defining_set],
                    "mobius": self.mobius[f.id],
                }
                for f in self.flats
            ],
            "cover_relations": [list(e) for e in self.cover_relations()],
        }


@dataclass(frozen=True)
class PoincarePolynomial:
    coefficients: Tuple[int, ...]

    def as_poly(self) -> Poly:
        return Poly(list(reversed(self.coefficients)), t)

    def __str__(self):
        return str(self.as_poly().as_expr())


class PosetBuilder:
    """
    Build the intersection poset by breadth-first closure: start from the
    ambient space and intersect each discovered flat with every hyperplane
    not yet containing it. Every flat is reachable one hyperplane at a time,
    and each such step is a cover relation.
    """
    def __init__(self):
        self.logger = logging.getLogger(__name__)

    def build(self, arr: Arrangement) -> IntersectionPoset:
        ell = arr.ambient_dim
        rows = [tuple(h.normal) + (h.offset,) for h in arr.hyperplanes]

        defining: Dict[Equations, FrozenSet[int]] = {(): frozenset()}
        covers = set()
        queue = deque([()])
        while queue:
            key = queue.popleft()
            for idx, row in enumerate(rows):
                if idx in defining[key]:
                    continue
                new_key = self._solve(key + (row,), ell)
                if new_key is None:
                    continue
                if new_key not in defining:
                    defining[new_key] = self._defining_set(new_key, rows, ell)
                    queue.append(new_key)
                covers.add((key, new_key))

        order = sorted(defining, key=lambda k: (len(k), tuple(sorted(defining[k]))))
        ids = {key: i for i, key in enumerate(order)}
        flats = tuple(
            Flat(
                id=ids[key],
                defining_set=tuple(sorted(defining[key])),
                rank=len(key),
                basepoint=self._basepoint(key, ell),
                direction_dim=ell - len(key),
                equations=key,
            )
            for key in order
        )

        G = nx.DiGraph()
        for f in flats:
            G.add_node(f.id, rank=f.rank)
        G.add_edges_from((ids[a], ids[b]) for a, b in covers)

        mobius: Dict[int, int] = {}
        for f in flats:
            if f.rank == 0:
                mobius[f.id] = 1
            else:
                mobius[f.id] = -sum(mobius[y] for y in nx.ancestors(G, f.id))
            G.nodes[f.id]["mobius"] = mobius[f.id]

        self.logger.info("Built intersection poset: %d flats, %d cover relations",
                         len(flats), G.number_of_edges())
        return IntersectionPoset(ell, flats, G, mobius)

    def _solve(self, rows: Sequence[Tuple], ell: int) -> Optional[Equations]:
        """RREF of the stacked equations, or None when they have no common solution."""
        M = DomainMatrix([list(r) for r in rows], (len(rows), ell + 1), QQ)
        R, pivots = M.rref()
        if ell in pivots:
            return None
        return tuple(tuple(r) for r in R.to_list()[:len(pivots)])

    def _defining_set(self, key: Equations, rows: List[Tuple], ell: int) -> FrozenSet[int]:
        contained = set()
        for idx, row in enumerate(rows):
            stacked = self._solve(key + (row,), ell)
            if stacked is not None and len(stacked) == len(key):
                contained.add(idx)
        return frozenset(contained)

    def _basepoint(self, key: Equations, ell: int) -> Tuple[QQ.dtype, ...]:
        point = [QQ(0)] * ell
        for r in key:
            pivot = next(i for i, c in enumerate(r) if c)
            point[pivot] = r[ell]
        return tuple(point)


def intersection_poset(arr: Arrangement) -> IntersectionPoset:
    return PosetBuilder().build(arr)


def poincare_polynomial(poset: IntersectionPoset) -> PoincarePolynomial:
    """pi(A, t) = sum over flats of mu(X) (-t)^rank(X)."""
    coeffs = [0] * (poset.rank() + 1)
    for f in poset.flats:
        coeffs[f.rank] += poset.mobius[f.id] * (-1) ** f.rank
    if any(c < 0 for c in coeffs) or coeffs[0] != 1:
        raise ConsistencyError(f"Poincare coefficients {coeffs} are not Betti numbers")
    return PoincarePolynomial(tuple(coeffs))


def characteristic_polynomial(poset: IntersectionPoset) -> Poly:
    """chi(A, t) = sum over flats of mu(X) t^(l - rank X)."""
    expr = sum(poset.mobius[f.id] * t ** (poset.ambient_dim - f.rank) for f in poset.flats)
    return Poly(expr, t)


def betti_numbers(arr: Arrangement) -> List[int]:
    return list(poincare_polynomial(intersection_poset(arr)).coefficients)
