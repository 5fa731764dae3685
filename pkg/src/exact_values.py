
import re
from typing import Callable, Iterable, Sequence

from sympy import QQ, QQ_I

from errors import ExactValueError

RATIONAL = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_rational(text: str):
    m = RATIONAL.match(text.strip())
    if not m:
        raise ExactValueError(f"malformed rational {text!r}")
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ExactValueError(f"zero denominator in {text!r}")
    return QQ(int(m.group(1)), den)


def parse_gaussian(text: str):
    """Parse `p/q`, `p/q+r/s i`, `r/s i`, `i` or `-i` into an exact Gaussian rational."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ExactValueError("empty value")
    if s.endswith("i"):
        body = s[:-1]
        cut = max(body.rfind("+"), body.rfind("-"))
        if cut > 0:
            real, imag = body[:cut], body[cut:]
        else:
            real, imag = "0", body
        if imag in ("", "+", "-"):
            imag += "1"
    else:
        real, imag = s, "0"
    return QQ_I(parse_rational(real), parse_rational(imag))


def format_rational(q) -> str:
    q = QQ.convert(q)
    num, den = int(q.numerator), int(q.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def format_gaussian(z) -> str:
    z = QQ_I.convert(z)
    x, y = format_rational(z.x), z.y
    if not y:
        return x
    mag = format_rational(abs(y))
    imag = "i" if mag == "1" else f"{mag}i"
    if not z.x:
        return ("-" if y < 0 else "") + imag
    return f"{x}{'-' if y < 0 else '+'}{imag}"


def format_value(v) -> str:
    if isinstance(v, QQ_I.dtype):
        return format_gaussian(v)
    return format_rational(v)


def format_matrix(rows: Iterable[Sequence], fmt: Callable = format_value) -> str:
    return "[" + ",".join("[" + ",".join(fmt(x) for x in row) + "]" for row in rows) + "]"
