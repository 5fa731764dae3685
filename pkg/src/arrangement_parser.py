
import logging
import re
from pathlib import Path
from typing import List, Optional, Union

from sympy import QQ

from arrangement import Arrangement, Hyperplane
from errors import (
    ArrangementParseError,
    DimensionMismatchError,
    DuplicateHyperplaneError,
    InputFileError,
    MalformedLineError,
    MalformedRationalError,
    ZeroNormalError,
)


class ArrangementParser:
    """
    Parse arrangement files: one hyperplane per line written as
    `a_1 ... a_l | b` for the hyperplane a . z = b. Rationals are `p`, `-p`
    or `p/q` with q > 0. Blank lines and `#` comments are skipped; the ambient
    dimension comes from the first hyperplane line.
    """
    RATIONAL = re.compile(r"^(-?\d+)(?:/(\d+))?$")

    def __init__(self):
        self.logger = logging.getLogger(__name__)

    def parse(self, text: str, ambient_dim: Optional[int] = None) -> Arrangement:
        hyperplanes: List[Hyperplane] = []
        seen = {}
        dim = ambient_dim

        for line_no, line in enumerate(text.splitlines(), start=1):
            l = line.split("#", 1)[0].strip()
            if not l:
                continue

            if l.count("|") != 1:
                raise MalformedLineError("expected exactly one '|' separating normal and offset",
                                         line_no, line)
            lhs, rhs = (part.split() for part in l.split("|"))
            if len(rhs) != 1:
                raise MalformedLineError("expected a single rational offset after '|'", line_no, line)
            if not lhs:
                raise MalformedLineError("missing normal vector", line_no, line)

            normal = tuple(self._rational(tok, line_no, line) for tok in lhs)
            offset = self._rational(rhs[0], line_no, line)

            if dim is None:
                dim = len(normal)
            elif len(normal) != dim:
                raise DimensionMismatchError(
                    f"normal has {len(normal)} coordinates, expected {dim}", line_no, line)
            if not any(normal):
                raise ZeroNormalError("zero normal vector", line_no, line)

            h = Hyperplane(normal, offset)
            key = h.canonical()
            if key in seen:
                raise DuplicateHyperplaneError(
                    f"duplicate hyperplane (same as line {seen[key]})", line_no, line)
            seen[key] = line_no
            hyperplanes.append(h)

        if dim is None:
            raise ArrangementParseError("no hyperplanes given and no ambient dimension to infer")
        self.logger.debug("Parsed %d hyperplanes in C^%d", len(hyperplanes), dim)
        return Arrangement(dim, tuple(hyperplanes))

    def parse_file(self, file_path: Union[str, Path], ambient_dim: Optional[int] = None) -> Arrangement:
        try:
            text = Path(file_path).read_text(encoding="utf-8")
        except UnicodeDecodeError as e:
            raise InputFileError(f"{file_path}: not UTF-8 text (byte {e.start})") from e
        except OSError as e:
            raise InputFileError(f"{file_path}: {e.strerror or e}") from e
        return self.parse(text, ambient_dim)

    def _rational(self, token: str, line_no: int, line: str):
        m = self.RATIONAL.match(token)
        if not m:
            raise MalformedRationalError(f"malformed rational {token!r}", line_no, line)
        num, den = m.group(1), m.group(2)
        if den is not None and int(den) == 0:
            raise MalformedRationalError(f"zero denominator in {token!r}", line_no, line)
        return QQ(int(num), int(den) if den else 1)


def parse_arrangement(text: str, ambient_dim: Optional[int] = None) -> Arrangement:
    return ArrangementParser().parse(text, ambient_dim)


def parse_arrangement_file(path: Union[str, Path], ambient_dim: Optional[int] = None) -> Arrangement:
    return ArrangementParser().parse_file(path, ambient_dim)
