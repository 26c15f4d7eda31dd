"""Text and JSON forms of scalars and matrices.

Scalars are written as exact strings such as ``"3"``, ``"-1/2*i"`` or
``"1/2+3/4*i"``; floats never appear in any document this package emits.
"""
import re
import json
import logging
from pathlib import Path

from sympy.polys.domains import QQ

from .errors import ParseError
from .scalar import as_scalar, gaussian
from . import matrices

logger = logging.getLogger(__name__)

RATIONAL = r"\d+(?:/\d+)?"


class ScalarParser:
    def __init__(self):
        self.patterns = {
            'real': rf"^(?P<re>[+-]?{RATIONAL})$",
            'imaginary': rf"^(?P<im>[+-]?(?:{RATIONAL})?)\*?i$",
            'complex': rf"^(?P<re>[+-]?{RATIONAL})(?P<im>[+-](?:{RATIONAL})?)\*?i$",
        }
        self.compiled_patterns = {k: re.compile(v) for k, v in self.patterns.items()}

    def _rational(self, text: str):
        sign = -1 if text.startswith('-') else 1
        body = text.lstrip('+-')
        if not body:
            return QQ(sign)
        num, _, den = body.partition('/')
        den = int(den) if den else 1
        if den == 0:
            raise ParseError(f"zero denominator in '{text}'")
        return QQ(sign * int(num), den)

    def parse(self, text):
        if isinstance(text, int) and not isinstance(text, bool):
            return gaussian(text)
        if not isinstance(text, str):
            raise ParseError(f"scalar must be a string, got {type(text).__name__}")
        s = re.sub(r"\s+", "", text)

        m = self.compiled_patterns['real'].match(s)
        if m:
            return gaussian(self._rational(m.group('re')))
        m = self.compiled_patterns['imaginary'].match(s)
        if m:
            return gaussian(0, self._rational(m.group('im')))
        m = self.compiled_patterns['complex'].match(s)
        if m:
            return gaussian(self._rational(m.group('re')), self._rational(m.group('im')))
        raise ParseError(f"not a Gaussian rational: '{text}'")


parser = ScalarParser()


def parse_scalar(text):
    return parser.parse(text)


def _format_rational(q) -> str:
    num, den = int(q.numerator), int(q.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def _format_imaginary(q) -> str:
    if q == 1:
        return "i"
    if q == -1:
        return "-i"
    return f"{_format_rational(q)}*i"


def format_scalar(z) -> str:
    z = as_scalar(z)
    if not z.y:
        return _format_rational(z.x)
    if not z.x:
        return _format_imaginary(z.y)
    sign = "+" if z.y > 0 else "-"
    return _format_rational(z.x) + sign + _format_imaginary(abs(z.y))


def matrix_to_json(a) -> list:
    return [[format_scalar(v) for v in row] for row in a.to_list()]


def matrix_from_json(rows):
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError("a matrix must be an array of arrays")
    widths = {len(r) for r in rows}
    if len(widths) > 1:
        raise ParseError("matrix rows have different lengths")
    return matrices.matrix([[parse_scalar(v) for v in row] for row in rows])


def load_document(source: str):
    """Accept either a path to a JSON file or the JSON text itself."""
    text = source
    try:
        path = Path(source)
        if path.is_file():
            logger.info("reading %s", path)
            text = path.read_text()
    except OSError:
        pass
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from e


def dumps(document) -> str:
    return json.dumps(document, indent=2, sort_keys=True)
