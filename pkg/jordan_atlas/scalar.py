"""Exact arithmetic in the Gaussian rationals Q(i).

Scalars are sympy ``QQ_I`` elements; their ``.x`` and ``.y`` attributes are
the real and imaginary ``QQ`` parts, always in lowest terms.
"""
from sympy import integer_nthroot
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.domains.gaussiandomains import GaussianRational

from .errors import DegenerateScalar

ZERO = QQ_I.zero
ONE = QQ_I.one
I = QQ_I(0, 1)
HALF = QQ_I(QQ(1, 2), 0)

# Powers of i, in the order used whenever a unit has to be picked.
UNITS = (ONE, I, -ONE, -I)


def gaussian(re=0, im=0) -> GaussianRational:
    """Build a scalar from ints, ``(num, den)`` pairs or QQ elements."""
    return QQ_I(_rational(re), _rational(im))


def _rational(value):
    if isinstance(value, tuple):
        return QQ(*value)
    return QQ.convert(value)


def as_scalar(value) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    return QQ_I.convert(value)


def scalar_arith(a, b, op: str) -> GaussianRational:
    a, b = as_scalar(a), as_scalar(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise DegenerateScalar(f"division of {a} by zero")
        return a / b
    raise ValueError(f"unknown scalar operation '{op}'")


def inverse(a) -> GaussianRational:
    return scalar_arith(ONE, a, "div")


def rational_sqrt(q):
    """Square root of a non-negative QQ element when it is rational."""
    if q < 0:
        return None
    num, exact_num = integer_nthroot(int(q.numerator), 2)
    den, exact_den = integer_nthroot(int(q.denominator), 2)
    if not (exact_num and exact_den):
        return None
    return QQ(num, den)


def scalar_sqrt_if_square(a):
    """Return b with b*b == a, or None when a is not a square in Q(i)."""
    a = as_scalar(a)
    x, y = a.x, a.y
    modulus = rational_sqrt(x * x + y * y)
    if modulus is None:
        return None
    # (p + qi)^2 = x + yi  gives  p^2 = (|a| + x)/2, q^2 = (|a| - x)/2
    p = rational_sqrt((modulus + x) / 2)
    if p is None:
        return None
    if p:
        q = y / (2 * p)
    else:
        q = rational_sqrt((modulus - x) / 2)
        if q is None:
            return None
    root = QQ_I(p, q)
    return root if root * root == a else None
