"""Jordan products, subalgebras of the ambient algebras, associative
envelopes, identity idempotents and isomorphism-type detection."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement

from . import codec
from . import matrices as mx
from .errors import NoIdentity, NotInAmbient, ParseError, ShapeError, Unrecognized
from .matrices import Subspace, subspace_from
from .models import Ambient, Family, TypeLabel
from .scalar import HALF

logger = logging.getLogger(__name__)

MIN_MATRIX_DEGREE = 3


def _generic_weight(k: int) -> int:
    """Weight of the k-th basis element in the degree test element.

    Weights polynomial in k give elements with repeated eigenvalues on
    echelon bases, so they are drawn from powers of 3 modulo a prime.
    """
    return 3 ** k % 101 + k


def jordan_product(x, y):
    n = mx.order(x)
    if y.shape != (n, n):
        raise ShapeError(f"jordan product of {x.shape} and {y.shape}")
    return mx.scale(mx.mat_add(mx.mat_mul(x, y), mx.mat_mul(y, x)), HALF)


@dataclass(frozen=True)
class Subalgebra:
    ambient: Ambient
    span: Subspace

    @property
    def dim(self) -> int:
        return self.span.dim

    def basis(self) -> list:
        return self.span.basis()

    @classmethod
    def from_generators(cls, ambient: Ambient, generators) -> "Subalgebra":
        generators = list(generators)
        shape = (ambient.order, ambient.order)
        for g in generators:
            if not ambient.contains(g):
                raise NotInAmbient(f"a basis element of shape {g.shape} is not in {ambient.label}")
        return cls(ambient, subspace_from(generators, shape))

    def to_dict(self) -> dict:
        return {
            "ambient": self.ambient.to_dict(),
            "basis": [codec.matrix_to_json(b) for b in self.basis()],
        }

    @classmethod
    def from_dict(cls, data) -> "Subalgebra":
        if not isinstance(data, dict) or "ambient" not in data or "basis" not in data:
            raise ParseError("a subalgebra needs 'ambient' and 'basis'")
        ambient = Ambient.from_dict(data["ambient"])
        return cls.from_generators(ambient, [codec.matrix_from_json(b) for b in data["basis"]])


def closure_check(s: Subalgebra) -> bool:
    basis = s.basis()
    for x, y in combinations_with_replacement(basis, 2):
        if not s.span.contains(jordan_product(x, y)):
            return False
    return True


def associative_envelope(s: Subalgebra) -> Subspace:
    span = s.span
    rounds = 0
    while True:
        basis = span.basis()
        grown = span.extend(mx.mat_mul(a, b) for a in basis for b in basis)
        rounds += 1
        logger.debug("envelope round %d: dim %d -> %d", rounds, span.dim, grown.dim)
        if grown.dim == span.dim:
            return span
        span = grown


def identity_idempotent(s: Subalgebra):
    basis = s.basis()
    if not basis:
        raise NoIdentity("the zero subalgebra has no identity")
    block = s.span.ambient_dim
    columns = []
    for b_k in basis:
        column = {}
        for j, b_j in enumerate(basis):
            for idx, v in mx.vec(jordan_product(b_k, b_j)).items():
                column[j * block + idx] = v
        columns.append(column)
    rhs = {}
    for j, b_j in enumerate(basis):
        for idx, v in mx.vec(b_j).items():
            rhs[j * block + idx] = v
    coeffs = mx.solve(columns, rhs, block * len(basis))
    if coeffs is None:
        raise NoIdentity("e∘x = x has no solution inside the span")
    return s.span.combination(coeffs)


def matrix_signatures(dim: int) -> list:
    """Matrix type labels of degree >= 3 whose dimension is ``dim``."""
    found = []
    m = MIN_MATRIX_DEGREE
    while m * (m + 1) // 2 <= dim:
        for family in (Family.FULL, Family.SYM, Family.SYMP):
            label = TypeLabel(family, m)
            if label.dimension == dim:
                found.append(label)
        m += 1
    return found


def is_spin_factor(s: Subalgebra, e) -> bool:
    """Traceless parts of the basis pairwise multiply into F·e, nondegenerately."""
    t_e = mx.trace(e)
    vectors = []
    for b in s.basis():
        v = mx.mat_sub(b, mx.scale(e, mx.trace(b) / t_e))
        if not mx.is_zero(v):
            vectors.append(v)
    traceless = subspace_from(vectors, e.shape)
    if traceless.dim != s.dim - 1 or traceless.dim < 2:
        return False
    vs = traceless.basis()
    gram = {}
    for i, j in combinations_with_replacement(range(len(vs)), 2):
        p = jordan_product(vs[i], vs[j])
        c = mx.trace(p) / t_e
        if mx.scale(e, c) != p:
            return False
        gram[(i, j)] = gram[(j, i)] = c
    return mx.mat_rank(mx.from_entries((len(vs), len(vs)), gram)) == len(vs)


def jordan_degree(s: Subalgebra, e) -> int:
    """Degree of the minimal polynomial of one generic element of s."""
    x = s.span.combination([_generic_weight(k) for k in range(s.dim)])
    powers = subspace_from([e])
    p = x
    while not powers.contains(p):
        powers = powers.extend([p])
        p = mx.mat_mul(p, x)
    return powers.dim


def detect_type(s: Subalgebra) -> TypeLabel:
    dim = s.dim
    e = identity_idempotent(s)
    if dim >= 3 and is_spin_factor(s, e):
        return TypeLabel(Family.SPIN, dim - 1)
    candidates = matrix_signatures(dim)
    if len(candidates) > 1:
        degree = jordan_degree(s, e)
        candidates = [c for c in candidates if c.m == degree]
    if len(candidates) != 1:
        raise Unrecognized(f"no simple type of dimension {dim} fits this subalgebra")
    label = candidates[0]
    if label.family is Family.FULL:
        envelope = associative_envelope(s).dim
        if envelope not in (label.m ** 2, 2 * label.m ** 2):
            raise Unrecognized(
                f"dimension {dim} suggests {label.label} but the envelope has dimension {envelope}")
    logger.debug("detected %s for a %d-dimensional subalgebra", label.label, dim)
    return label
