
import logging
from itertools import product
from typing import Any, Dict, List

import numpy as np

from char_classes import ToralRep, is_stably_trivial, pairing_witness

logger = logging.getLogger("sw_oracle")

EXHAUSTIVE_MAX_ROWS = 4
EXHAUSTIVE_MAX_RANK = 3
RANDOM_MAX_ROWS = 6
RANDOM_MAX_RANK = 5


def even_multiplicity(matrix: np.ndarray) -> bool:
    """Every distinct nonzero row occurs an even number of times."""
    if matrix.shape[0] == 0:
        return True
    values, counts = np.unique(matrix, axis=0, return_counts=True)
    nonzero = values.any(axis=1)
    return bool(np.all(counts[nonzero] % 2 == 0))


class SWOracle:
    """
    Compare the w1/w2 triviality test against the even-multiplicity oracle.
    Each run produces a summary dict with counts of passed/failed matrices;
    `details` lists the mismatches only.
    """
    def __init__(self):
        self.logger = logger

    def check(self, matrix: np.ndarray) -> Dict[str, Any]:
        q, n = matrix.shape
        rep = ToralRep.from_rows(matrix.tolist(), n=n)
        expected = even_multiplicity(matrix)
        got = is_stably_trivial(rep)
        result = "pass" if got == expected else "fail"
        msg = "agree"
        if result == "pass" and got:
            witness = pairing_witness(rep)
            if witness.residual:
                result, msg = "fail", f"unpaired rows {[r + 1 for r in witness.residual]}"
        elif result == "fail":
            msg = f"stably trivial={got}, even multiplicity={expected}"
        return {"rows": matrix.tolist(), "result": result, "msg": msg}

    def run_exhaustive(self, max_rows: int = EXHAUSTIVE_MAX_ROWS,
                       max_rank: int = EXHAUSTIVE_MAX_RANK) -> Dict[str, Any]:
        results = []
        for n in range(1, max_rank + 1):
            for q in range(max_rows + 1):
                for bits in product((0, 1), repeat=q * n):
                    results.append(self.check(np.array(bits, dtype=np.uint8).reshape(q, n)))
        summary = self._summarize(results)
        self.logger.info("Exhaustive oracle (q <= %d, n <= %d): %d matrices, %d mismatches",
                         max_rows, max_rank, summary["total"], summary["failed"])
        return summary

    def run_random(self, samples: int, max_rows: int = RANDOM_MAX_ROWS,
                   max_rank: int = RANDOM_MAX_RANK, seed: int = 0) -> Dict[str, Any]:
        rng = np.random.default_rng(seed)
        results = []
        for _ in range(samples):
            q = int(rng.integers(0, max_rows + 1))
            n = int(rng.integers(1, max_rank + 1))
            matrix = rng.integers(0, 2, size=(q, n), dtype=np.uint8)
            # duplicate rows often enough that trivial cases are sampled
            if q >= 2 and rng.random() < 0.5:
                half = matrix[: q // 2]
                matrix = np.concatenate([half, half, matrix[2 * (q // 2):]])
                matrix = matrix[rng.permutation(q)]
            results.append(self.check(matrix))
        summary = self._summarize(results)
        self.logger.info("Random oracle (%d samples, seed %d): %d mismatches",
                         samples, seed, summary["failed"])
        return summary

    def _summarize(self, results: List[Dict[str, Any]]) -> Dict[str, Any]:
        passed = sum(1 for r in results if r["result"] == "pass")
        failed = [r for r in results if r["result"] == "fail"]
        return {"total": len(results), "passed": passed, "failed": len(failed), "details": failed}


def run_exhaustive(max_rows: int = EXHAUSTIVE_MAX_ROWS, max_rank: int = EXHAUSTIVE_MAX_RANK) -> Dict[str, Any]:
    return SWOracle().run_exhaustive(max_rows, max_rank)


def run_random(samples: int, max_rows: int = RANDOM_MAX_ROWS, max_rank: int = RANDOM_MAX_RANK,
               seed: int = 0) -> Dict[str, Any]:
    return SWOracle().run_random(samples, max_rows, max_rank, seed)
