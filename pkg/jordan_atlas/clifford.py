"""Clifford algebra C(V, f) with f the identity form, its reversal, and the
matrix realizations of F ⊕ V used by the spin catalog entries.

Basis blades are bitmasks: bit p set means generator x_{p+1} is present.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache, reduce

from . import codec
from . import matrices as mx
from .errors import InvariantViolation, MismatchedAlgebra, ParseError, ShapeError, SingularMatrix
from .scalar import HALF, I, ONE, UNITS, ZERO, as_scalar, scalar_sqrt_if_square

logger = logging.getLogger(__name__)

PAULI_X = mx.matrix([[0, 1], [1, 0]])
PAULI_Y = mx.matrix([[0, -I], [I, 0]])
PAULI_Z = mx.matrix([[1, 0], [0, -1]])


def reordering_sign(a_bits: int, b_bits: int) -> int:
    """Sign picked up when the blade ``a`` times ``b`` is sorted."""
    a_bits >>= 1
    swaps = 0
    while a_bits:
        swaps += bin(a_bits & b_bits).count("1")
        a_bits >>= 1
    return -1 if swaps & 1 else 1


def blade(indices) -> int:
    bits = 0
    for i in indices:
        bits |= 1 << (i - 1)
    return bits


def blade_indices(bits: int) -> list:
    return [p + 1 for p in range(bits.bit_length()) if bits >> p & 1]


def blade_grade(bits: int) -> int:
    return bin(bits).count("1")


@dataclass(frozen=True)
class CliffordElement:
    """Element of C(V, f), dim V = 2m, as ``{blade: coefficient}``."""

    m: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        top = 1 << (2 * self.m)
        cleaned = {}
        for bits, c in self.terms.items():
            if not 0 <= bits < top:
                raise ShapeError(f"blade {bits:b} is outside C(V) with dim V = {2 * self.m}")
            c = as_scalar(c)
            if c:
                cleaned[bits] = c
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def scalar(cls, m, c=1):
        return cls(m, {0: c})

    @classmethod
    def generator(cls, m, i):
        if not 1 <= i <= 2 * m:
            raise ShapeError(f"no generator x_{i} when dim V = {2 * m}")
        return cls(m, {1 << (i - 1): ONE})

    @classmethod
    def monomial(cls, m, indices, c=1):
        """Product x_{i1} x_{i2} ... in the order given."""
        out = cls.scalar(m, c)
        for i in indices:
            out = cliff_mul(out, cls.generator(m, i))
        return out

    def __add__(self, other):
        if not isinstance(other, CliffordElement):
            return NotImplemented
        if other.m != self.m:
            raise MismatchedAlgebra(f"C(V) of dim {2 * self.m} and {2 * other.m}")
        total = dict(self.terms)
        for bits, c in other.terms.items():
            total[bits] = total.get(bits, ZERO) + c
        return CliffordElement(self.m, total)

    def __mul__(self, other):
        return cliff_mul(self, other)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "terms": [{"indices": blade_indices(bits), "coeff": codec.format_scalar(c)}
                      for bits, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_dict(cls, data) -> "CliffordElement":
        try:
            m = int(data["m"])
            terms = {}
            for term in data["terms"]:
                bits = blade(term["indices"])
                terms[bits] = terms.get(bits, ZERO) + codec.parse_scalar(term["coeff"])
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"malformed Clifford element: {e}") from e
        return cls(m, terms)


def cliff_mul(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    if a.m != b.m:
        raise MismatchedAlgebra(f"C(V) of dim {2 * a.m} and {2 * b.m}")
    out = {}
    for x, c in a.terms.items():
        for y, d in b.terms.items():
            # every x_i squares to f(x_i, x_i) = 1
            bits = x ^ y
            out[bits] = out.get(bits, ZERO) + reordering_sign(x, y) * c * d
    return CliffordElement(a.m, out)


def reversal_sign(bits: int) -> int:
    g = blade_grade(bits)
    return -1 if (g * (g - 1) // 2) % 2 else 1


def cliff_reverse(a: CliffordElement) -> CliffordElement:
    return CliffordElement(a.m, {bits: reversal_sign(bits) * c for bits, c in a.terms.items()})


@dataclass(frozen=True)
class GammaRep:
    """Matrices of order 2^m representing the generators of C(V), dim V = 2m."""

    m: int
    gammas: tuple

    @property
    def order(self) -> int:
        return 1 << self.m

    def monomial(self, bits: int):
        factors = [self.gammas[i - 1] for i in blade_indices(bits)]
        return reduce(mx.mat_mul, factors, mx.identity(self.order))

    def image(self, a: CliffordElement):
        if a.m != self.m:
            raise MismatchedAlgebra(f"element of dim V = {2 * a.m} on a rep of dim V = {2 * self.m}")
        total = mx.zeros(self.order)
        for bits, c in a.terms.items():
            total = mx.mat_add(total, mx.scale(self.monomial(bits), c))
        return total


def _tensor_chain(factors):
    return reduce(mx.kron, factors)


@lru_cache(maxsize=None)
def gamma_rep(m: int) -> GammaRep:
    if m < 1:
        raise ShapeError("gamma matrices need m >= 1")
    gammas = []
    for p in range(1, m + 1):
        head = [PAULI_Z] * (p - 1)
        tail = [mx.identity(2)] * (m - p)
        gammas.append(_tensor_chain(head + [PAULI_X] + tail))
        gammas.append(_tensor_chain(head + [PAULI_Y] + tail))
    return GammaRep(m, tuple(gammas))


def _normalized_top(m, gammas):
    """c·γ1⋯γ2m squaring to I, c the first of 1, i, -1, -i that works."""
    top = reduce(mx.mat_mul, gammas)
    eye = mx.identity(1 << m)
    for c in UNITS:
        candidate = mx.scale(top, c)
        if mx.mat_mul(candidate, candidate) == eye:
            return candidate
    raise InvariantViolation(f"no unit normalizes the top gamma product for m={m}")


@lru_cache(maxsize=None)
def chirality(m: int):
    return _normalized_top(m, gamma_rep(m).gammas)


@lru_cache(maxsize=None)
def involution_matrix(m: int):
    """C with γᵗC = Cγ for every generator, so x ↦ C⁻¹xᵗC is the reversal."""
    n = 1 << m
    gammas = gamma_rep(m).gammas
    columns = []
    for a in range(n):
        for b in range(n):
            e = mx.unit(n, a, b)
            column = {}
            for g_index, g in enumerate(gammas):
                residual = mx.mat_sub(mx.mat_mul(mx.transpose(g), e), mx.mat_mul(e, g))
                for idx, v in mx.vec(residual).items():
                    column[g_index * n * n + idx] = v
            columns.append(column)
    kernel = mx.nullspace(columns, len(gammas) * n * n)
    if not kernel:
        raise InvariantViolation(f"the reversal has no matrix form for m={m}")
    logger.debug("reversal matrix for m=%d: solution space of dim %d", m, len(kernel))
    first = kernel[0]
    return mx.unvec({k: v for k, v in enumerate(first) if v}, (n, n))


def involution_is_symmetric(m: int) -> bool:
    return mx.is_symmetric(involution_matrix(m))


def represented_involution(m: int, x):
    c = involution_matrix(m)
    return mx.mat_mul(mx.mat_mul(mx.mat_inverse(c), mx.transpose(x)), c)


def represented_involution_fixed_dim(m: int) -> int:
    """Dimension of {x : C⁻¹xᵗC = x} in the matrices of order 2^m."""
    n = 1 << m
    c = involution_matrix(m)
    # x is fixed iff xᵗC - Cx = 0
    values = {}
    for a in range(n):
        for b in range(n):
            e = mx.unit(n, a, b)
            residual = mx.mat_sub(mx.mat_mul(mx.transpose(e), c), mx.mat_mul(c, e))
            for idx, v in mx.vec(residual).items():
                values[(idx, a * n + b)] = v
    return n * n - mx.mat_rank(mx.from_entries((n * n, n * n), values))


def clifford_fixed_dim_formula(m: int) -> int:
    half = 1 << (m - 1)
    if m % 4 in (0, 1):
        return half * ((1 << m) + 1)
    return half * ((1 << m) - 1)


# -- congruence normal forms of the reversal matrix ---------------------------

def _form(c_entries, u, v):
    total = ZERO
    for (a, b), value in c_entries.items():
        ua, vb = u.get(a), v.get(b)
        if ua and vb:
            total += ua * value * vb
    return total


def _combine(u, a, v, b):
    out = {}
    for vec, coeff in ((u, a), (v, b)):
        if not coeff:
            continue
        for idx, value in vec.items():
            out[idx] = out.get(idx, ZERO) + coeff * value
    return {k: v for k, v in out.items() if v}


def _columns_matrix(n, columns):
    return mx.from_entries((n, n), {(i, j): v for j, col in enumerate(columns) for i, v in col.items()})


def orthogonal_frame(c):
    """Columns q_i with qᵗCq = α·I for a symmetric invertible C.

    Returns (Q, α). Diagonal values of a congruence diagonalization are put
    in one square class by column scaling; pairs of equal non-square values
    a are sent to α·I₂ by (x, y), (-y, x) with x² + y² = 1/a'.
    """
    if not mx.is_symmetric(c):
        raise ShapeError("orthogonal frame needs a symmetric matrix")
    n = mx.order(c)
    c_entries = mx.entries(c)
    remaining = [{i: ONE} for i in range(n)]
    frame, values = [], []
    while remaining:
        pick = next((v for v in remaining if _form(c_entries, v, v)), None)
        if pick is None:
            pair = next(((u, w) for u in remaining for w in remaining
                         if u is not w and _form(c_entries, u, w)), None)
            if pair is None:
                raise SingularMatrix("the form is degenerate")
            u, w = pair
            pick = _combine(u, ONE, w, ONE)
            remaining[remaining.index(u)] = pick
        remaining = [v for v in remaining if v is not pick]
        norm = _form(c_entries, pick, pick)
        frame.append(pick)
        values.append(norm)
        remaining = [_combine(v, ONE, pick, -_form(c_entries, v, pick) / norm) for v in remaining]
    alpha = values[0]
    unpaired = []
    for idx, value in enumerate(values):
        root = scalar_sqrt_if_square(value / alpha)
        if root is not None:
            frame[idx] = _combine(frame[idx], ONE / root, {}, ZERO)
            values[idx] = alpha
            continue
        partner = None
        for j in unpaired:
            t = scalar_sqrt_if_square(value / values[j])
            if t is not None:
                partner = j
                frame[idx] = _combine(frame[idx], ONE / t, {}, ZERO)
                values[idx] = values[j]
                break
        if partner is None:
            unpaired.append(idx)
            continue
        unpaired.remove(partner)
        a = values[partner] / alpha
        x = (ONE + ONE / a) * HALF
        y = (ONE - ONE / a) / (2 * I)
        u, v = frame[partner], frame[idx]
        frame[partner] = _combine(u, x, v, y)
        frame[idx] = _combine(u, -y, v, x)
        values[partner] = values[idx] = alpha
    if unpaired:
        raise InvariantViolation("diagonal values fall into unpaired square classes")
    return _columns_matrix(n, frame), alpha


def symplectic_frame(c):
    """Q with QᵗCQ = J for a skew invertible C, columns ordered (u1..un, v1..vn)."""
    if not mx.is_skew(c):
        raise ShapeError("symplectic frame needs a skew matrix")
    size = mx.order(c)
    c_entries = mx.entries(c)
    remaining = [{i: ONE} for i in range(size)]
    us, vs = [], []
    while remaining:
        u = remaining[0]
        v = next((w for w in remaining[1:] if _form(c_entries, u, w)), None)
        if v is None:
            raise SingularMatrix("the form is degenerate")
        u = _combine(u, ONE / _form(c_entries, u, v), {}, ZERO)
        us.append(u)
        vs.append(v)
        rest = [w for w in remaining[1:] if w is not v]
        # w' = w - ω(w,v)u + ω(w,u)v is orthogonal to both
        remaining = []
        for w in rest:
            w = _combine(w, ONE, u, -_form(c_entries, w, v))
            w = _combine(w, ONE, v, _form(c_entries, w, u))
            if w:
                remaining.append(w)
    return _columns_matrix(size, us + vs)


@lru_cache(maxsize=None)
def spin_images(d: int, realization: str = "plain") -> tuple:
    """Images of 1, x_1, ..., x_d in matrices of order 2^m, m = d // 2.

    ``realization`` is ``plain`` (the gamma chain), ``symmetric`` (every
    image symmetric, needs a symmetric reversal) or ``symplectic`` (every
    image fixed by j, needs a skew reversal). For odd d, x_d goes to the
    chirality element.
    """
    m = d // 2
    if m < 1:
        raise ShapeError(f"Spin({d}) has no Clifford realization")
    images = list(gamma_rep(m).gammas)
    if d % 2:
        images.append(chirality(m))
    n = 1 << m
    if realization == "symmetric":
        q, _ = orthogonal_frame(involution_matrix(m))
    elif realization == "symplectic":
        q = symplectic_frame(involution_matrix(m))
    elif realization == "plain":
        q = None
    else:
        raise ValueError(f"unknown realization '{realization}'")
    if q is not None:
        q_inv = mx.mat_inverse(q)
        images = [mx.mat_mul(mx.mat_mul(q_inv, g), q) for g in images]
    return tuple([mx.identity(n)] + images)


@dataclass(frozen=True)
class SpinElement:
    """α ⊕ v in J(f, 1) = F ⊕ V with f the identity form."""

    scalar: object
    vector: tuple

    def __post_init__(self):
        object.__setattr__(self, "scalar", as_scalar(self.scalar))
        object.__setattr__(self, "vector", tuple(as_scalar(v) for v in self.vector))

    @property
    def d(self) -> int:
        return len(self.vector)

    def to_dict(self) -> dict:
        return {"scalar": codec.format_scalar(self.scalar),
                "vector": [codec.format_scalar(v) for v in self.vector]}


def spin_product(a: SpinElement, b: SpinElement) -> SpinElement:
    if a.d != b.d:
        raise MismatchedAlgebra(f"J(f,1) with dim V = {a.d} and {b.d}")
    f = sum((v * w for v, w in zip(a.vector, b.vector)), ZERO)
    vector = [a.scalar * w + b.scalar * v for v, w in zip(a.vector, b.vector)]
    return SpinElement(a.scalar * b.scalar + f, vector)


def represent_spin(x: SpinElement, realization: str = "plain"):
    images = spin_images(x.d, realization)
    total = mx.scale(images[0], x.scalar)
    for c, image in zip(x.vector, images[1:]):
        total = mx.mat_add(total, mx.scale(image, c))
    return total
